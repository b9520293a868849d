import logging
from pathlib import Path
from typing import Any, Optional

import orjson
import pandas as pd

from src.config import Config
from src.graphs.graph import Graph
from src.topology.complex import SimplicialComplex, one_skeleton_graph

logger = logging.getLogger(__name__)

JSON_OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS


def dumps_json(data: Any) -> str:
    return orjson.dumps(data, option=JSON_OPTIONS).decode("utf-8")


def graph_to_edge_list(g: Graph) -> str:
    return "".join(f"{g.labels[u]} {g.labels[v]}\n" for u, v in g.edges)


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f'  "{label}";' for label in g.labels]
    lines += [f'  "{g.labels[u]}" -- "{g.labels[v]}";' for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def skeleton_to_dot(c: SimplicialComplex, name: str = "M") -> str:
    """1-squelette de M(G): sommets étiquetés par les arêtes u-v de G"""
    skeleton = one_skeleton_graph(c)
    lines = [f"graph {name} {{"]
    lines += [f'  "{c.labels[v]}";' for v in sorted(skeleton.nodes)]
    lines += [
        f'  "{c.labels[a]}" -- "{c.labels[b]}";' for a, b in sorted(tuple(sorted(e)) for e in skeleton.edges)
    ]
    lines.append("}")
    return "\n".join(lines) + "\n"


class ReportWriter:
    def __init__(self, config: Config):
        self.config = config
        self.output_dir = Path(config.OUTPUT_DIR)

    def _target(self, path: Optional[str], default_name: str) -> Path:
        target = Path(path) if path else self.output_dir / default_name
        target.parent.mkdir(parents=True, exist_ok=True)
        return target

    def write_text(self, content: str, path: Optional[str], default_name: str) -> Path:
        try:
            target = self._target(path, default_name)
            target.write_text(content, encoding="utf-8")
            logger.info(f"✅ Fichier écrit: {target}")
            return target
        except OSError as e:
            logger.error(f"❌ Erreur lors de l'écriture de {path or default_name}: {e}")
            raise

    def write_json(self, data: Any, path: Optional[str], default_name: str) -> Path:
        return self.write_text(dumps_json(data) + "\n", path, default_name)

    def write_table(self, frame: pd.DataFrame, path: Optional[str], default_name: str = "table_c7.csv") -> Path:
        """Écrit un tableau CSV (index nommé 'row')"""
        try:
            target = self._target(path, default_name)
            frame.to_csv(target, index_label="row")
            logger.info(f"✅ Tableau CSV écrit: {target} ({len(frame)} lignes)")
            return target
        except OSError as e:
            logger.error(f"❌ Erreur lors de l'écriture du CSV: {e}")
            raise

    def write_counterexample(self, g: Graph, check: str) -> Path:
        header = f"# contre-exemple minimisé pour la vérification {check}\n"
        return self.write_text(header + graph_to_edge_list(g), None, f"counterexample_{check}.txt")
