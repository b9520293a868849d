"""Étiquetage canonique exact des petits graphes.

Raffinement de couleurs (degré puis multiensemble des couleurs voisines),
individualisation-raffinement sur la plus petite cellule non triviale, et
certificat = plus petite chaîne graph6 parmi toutes les feuilles.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from src.config import Config
from src.errors import CapabilityError
from src.graphs.graph import Graph, iter_bits
from src.graphs.graph6 import encode_graph6

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class CanonicalForm:
    certificate: bytes

    @property
    def text(self) -> str:
        return self.certificate.decode("ascii")

    def __str__(self) -> str:
        return self.text


def _refine(adj: Tuple[int, ...], colors: List[int]) -> List[int]:
    cell_count = len(set(colors))
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[w] for w in iter_bits(adj[v]))))
            for v in range(len(adj))
        ]
        rank = {s: i for i, s in enumerate(sorted(set(signatures)))}
        colors = [rank[s] for s in signatures]
        if len(rank) == cell_count:
            return colors
        cell_count = len(rank)


def _are_twins(adj: Tuple[int, ...], u: int, v: int) -> bool:
    return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)


def canonical_labeling(g: Graph) -> Tuple[int, ...]:
    """Permutation canonique: le sommet v devient perm[v]"""
    if g.n > Config.MAX_CANONICAL_VERTICES:
        raise CapabilityError(
            f"Forme canonique limitée à {Config.MAX_CANONICAL_VERTICES} sommets (n={g.n})"
        )
    adj = g.adjacency
    best: Optional[Tuple[str, Tuple[int, ...]]] = None

    def search(colors: List[int]):
        nonlocal best
        cells = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        open_cells = [(len(members), c) for c, members in cells.items() if len(members) > 1]
        if not open_cells:
            perm = tuple(colors)
            code = encode_graph6(g.relabeled(perm))
            if best is None or code < best[0]:
                best = (code, perm)
            return
        _, target = min(open_cells)
        representatives: List[int] = []
        for v in cells[target]:
            # échanger deux jumeaux est un automorphisme: une seule branche suffit
            if any(_are_twins(adj, r, v) for r in representatives):
                continue
            representatives.append(v)
            split = [2 * c for c in colors]
            split[v] = 2 * colors[v] - 1
            search(_refine(adj, split))

    search(_refine(adj, [bin(m).count("1") for m in adj]))
    return best[1] if best else ()


def canonical_form(g: Graph) -> CanonicalForm:
    perm = canonical_labeling(g)
    return CanonicalForm(encode_graph6(g.relabeled(perm)).encode("ascii"))


def canonical_graph(g: Graph) -> Graph:
    return g.relabeled(canonical_labeling(g))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    return canonical_form(g) == canonical_form(h)


def dedup_by_iso(graphs: Iterable[Graph]) -> List[Graph]:
    """Un représentant par classe d'isomorphisme (le premier rencontré)"""
    seen = set()
    survivors = []
    for g in graphs:
        form = canonical_form(g)
        if form not in seen:
            seen.add(form)
            survivors.append(g)
    return survivors
