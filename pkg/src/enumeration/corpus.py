"""Générateurs de corpus: sur-graphes de C7 par cordes, graphes étiquetés, tirages aléatoires"""

import logging
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from src.graphs.graph import Edge, Graph, cycle_graph, induced_subgraph

logger = logging.getLogger(__name__)

C7 = cycle_graph(7)
C7_CHORDS: Tuple[Edge, ...] = tuple(
    e for e in combinations(range(7), 2) if e not in C7.edge_index
)


def c7_chord_supergraphs(k: int) -> Iterator[Graph]:
    """Les C(14, k) graphes obtenus en ajoutant k cordes au C7 étiqueté 0-1-...-6-0"""
    for chords in combinations(C7_CHORDS, k):
        yield Graph(7, C7.edges + chords)


def vertex_pairs(n: int) -> List[Edge]:
    return list(combinations(range(n), 2))


def graph_from_mask(n: int, mask: int, pairs: Optional[Sequence[Edge]] = None) -> Optional[Graph]:
    """Graphe étiqueté codé par un masque sur les paires, sommets isolés retirés (None si vide)"""
    pairs = pairs or vertex_pairs(n)
    edges = tuple(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
    if not edges:
        return None
    g = Graph(n, edges)
    isolated = g.isolated_vertices()
    return induced_subgraph(g, [v for v in range(n) if v not in isolated]) if isolated else g


def labeled_graph_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def random_graph_masks(
    n: int, count: int, seed: int, densities: Sequence[float]
) -> List[Tuple[float, int]]:
    """Tirages d'Erdős–Rényi reproductibles.

    Le générateur est PCG64 alimenté par SeedSequence(seed).spawn: un flux
    enfant par densité. Les tirages sont répartis entre densités, les
    premières densités recevant le reste de la division.
    """
    pairs = len(vertex_pairs(n))
    weights = 1 << np.arange(pairs, dtype=object)
    children = np.random.SeedSequence(seed).spawn(len(densities))
    draws: List[Tuple[float, int]] = []
    for index, (density, child) in enumerate(zip(densities, children)):
        share = count // len(densities) + (1 if index < count % len(densities) else 0)
        if share == 0:
            continue
        rng = np.random.Generator(np.random.PCG64(child))
        bits = rng.random((share, pairs)) < density
        for row in bits:
            draws.append((density, int(np.dot(row.astype(object), weights))))
    logger.debug(f"{len(draws)} tirages aléatoires générés (n={n}, graine={seed})")
    return draws
