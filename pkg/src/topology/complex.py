"""Complexes simpliciaux donnés par leurs facettes, et complexe des couplages M(G).

Les sommets de M(G) sont les arêtes de G: le sommet i de M(G) correspond à
g.edges[i], et son étiquette est "u-v".
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

import networkx as nx

from src.errors import ConsistencyError, GraphInputError
from src.graphs.graph import Graph, enumerate_matchings

logger = logging.getLogger(__name__)

Face = Tuple[int, ...]


def _maximal(faces: Iterable[Face]) -> Tuple[Face, ...]:
    candidates = sorted({tuple(sorted(f)) for f in faces}, key=lambda f: (-len(f), f))
    kept: List[Face] = []
    for f in candidates:
        if not any(set(f) <= set(k) for k in kept):
            kept.append(f)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class SimplicialComplex:
    facets: Tuple[Face, ...]
    labels: Tuple[str, ...] = field(default=(), compare=False)
    faces: FrozenSet[Face] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        facets = _maximal(self.facets) if self.facets else ((),)
        object.__setattr__(self, "facets", facets)
        faces: Set[Face] = set()
        for facet in facets:
            for size in range(len(facet) + 1):
                faces.update(combinations(facet, size))
        object.__setattr__(self, "faces", frozenset(faces))
        if not self.labels:
            top = max((v for f in facets for v in f), default=-1)
            object.__setattr__(self, "labels", tuple(str(i) for i in range(top + 1)))

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def faces_of_dim(self, k: int) -> List[Face]:
        return sorted(f for f in self.faces if len(f) == k + 1)

    def __contains__(self, face: Sequence[int]) -> bool:
        return tuple(sorted(face)) in self.faces

    def label_face(self, face: Face) -> List[str]:
        return [self.labels[v] for v in face]

    def to_facet_lines(self) -> List[str]:
        """Une facette par ligne, étiquettes séparées par des virgules"""
        return [",".join(self.label_face(f)) for f in self.facets]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vertices": [self.labels[v] for v in self.vertices],
            "facets": [self.label_face(f) for f in self.facets],
            "f_vector": f_vector(self),
            "dimension": self.dimension,
        }


def dimension(c: SimplicialComplex) -> int:
    return c.dimension


def is_pure(c: SimplicialComplex) -> bool:
    return len({len(f) for f in c.facets}) == 1


def f_vector(c: SimplicialComplex) -> List[int]:
    counts = [0] * (c.dimension + 1)
    for face in c.faces:
        if face:
            counts[len(face) - 1] += 1
    return counts


def euler_characteristic(c: SimplicialComplex) -> int:
    return sum((-1) ** i * f for i, f in enumerate(f_vector(c)))


def link(c: SimplicialComplex, face: Sequence[int]) -> SimplicialComplex:
    sigma = tuple(sorted(face))
    if sigma not in c.faces:
        raise GraphInputError(f"La face {c.label_face(sigma)} n'appartient pas au complexe")
    rest = set(sigma)
    pieces = [tuple(v for v in f if v not in rest) for f in c.facets if rest <= set(f)]
    return SimplicialComplex(pieces, labels=c.labels)


def one_skeleton_graph(c: SimplicialComplex) -> nx.Graph:
    skeleton = nx.Graph()
    skeleton.add_nodes_from(c.vertices)
    skeleton.add_edges_from(f for f in c.faces if len(f) == 2)
    return skeleton


def one_skeleton_is_connected_graph_with_edge(c: SimplicialComplex) -> bool:
    """Vrai si c est un graphe (dimension 1) connexe avec au moins une arête"""
    if c.dimension != 1:
        return False
    return nx.is_connected(one_skeleton_graph(c))


def _facets_by_enumeration(g: Graph) -> Tuple[Face, ...]:
    vertex_masks = [(1 << u) | (1 << v) for u, v in g.edges]
    facets = []
    for matching in enumerate_matchings(g, g.n // 2):
        used = 0
        for u, v in matching:
            used |= (1 << u) | (1 << v)
        if all(mask & used for mask in vertex_masks):
            facets.append(tuple(sorted(g.edge_index[e] for e in matching)))
    return tuple(sorted(facets))


def disjointness_graph(g: Graph) -> nx.Graph:
    """Graphe sur les arêtes de g, deux arêtes reliées si elles sont disjointes"""
    graph = nx.Graph()
    graph.add_nodes_from(range(g.edge_count))
    for (i, e), (j, f) in combinations(enumerate(g.edges), 2):
        if not set(e) & set(f):
            graph.add_edge(i, j)
    return graph


def _facets_by_cliques(g: Graph) -> Tuple[Face, ...]:
    return tuple(sorted(tuple(sorted(clique)) for clique in nx.find_cliques(disjointness_graph(g))))


def matching_complex(g: Graph) -> SimplicialComplex:
    """M(G), construit par énumération des couplages puis vérifié par les cliques"""
    if g.edge_count == 0:
        raise GraphInputError("M(G) n'est défini que pour un graphe avec au moins une arête")
    direct = _facets_by_enumeration(g)
    via_cliques = _facets_by_cliques(g)
    if direct != via_cliques:
        raise ConsistencyError(
            f"Constructions de M(G) divergentes: {len(direct)} facettes contre {len(via_cliques)}"
        )
    labels = tuple(g.edge_label(e) for e in g.edges)
    return SimplicialComplex(direct, labels=labels)
