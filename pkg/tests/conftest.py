import pytest

from src.config import Config
from src.graphs.graph import (
    Graph,
    bowtie_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    star_graph,
)


@pytest.fixture
def config(tmp_path, monkeypatch):
    """Config dont les sorties vont dans un répertoire temporaire"""
    monkeypatch.setattr(Config, "OUTPUT_DIR", str(tmp_path / "output"))
    monkeypatch.setattr(Config, "THREADS", 1)
    return Config()


@pytest.fixture
def c7():
    return cycle_graph(7)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def bowtie():
    return bowtie_graph()


@pytest.fixture
def p5():
    # chemin de longueur 4
    return path_graph(5)


@pytest.fixture
def petal_graph():
    # trois étoiles S2 collées au sommet 0 par une feuille
    return Graph(7, ((0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)))


@pytest.fixture
def k3_plus_s2():
    return disjoint_union(complete_graph(3), star_graph(2))


@pytest.fixture
def write_graph(tmp_path):
    """Écrit un fichier de graphe et renvoie son chemin"""

    def _write(content: str, name: str = "graph.txt") -> str:
        path = tmp_path / name
        path.write_text(content, encoding="utf-8")
        return str(path)

    return _write
