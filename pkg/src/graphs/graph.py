"""Graphes simples, couplages et prédicats structurels.

Les sommets sont des entiers denses 0..n-1 ; l'adjacence est stockée sous
forme de masques de bits (un entier par sommet), d'où la limite n <= 64.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from src.config import Config
from src.errors import CapabilityError, GraphInputError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
Matching = Tuple[Edge, ...]


def make_edge(u: int, v: int) -> Edge:
    """Arête normalisée (u < v)"""
    if u == v:
        raise GraphInputError(f"Boucle interdite sur le sommet {u}")
    return (u, v) if u < v else (v, u)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    edges: Tuple[Edge, ...]
    labels: Tuple[str, ...] = field(default=(), compare=False)
    origin: Tuple[int, ...] = field(default=(), compare=False)
    raw: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphInputError(f"Nombre de sommets négatif: {self.n}")
        if self.n > Config.MAX_VERTICES:
            raise CapabilityError(
                f"{self.n} sommets: au plus {Config.MAX_VERTICES} sont supportés"
            )
        normalized = set()
        for u, v in self.edges:
            e = make_edge(u, v)
            if e[0] < 0 or e[1] >= self.n:
                raise GraphInputError(f"Arête {u}-{v} hors de 0..{self.n - 1}")
            if e in normalized:
                raise GraphInputError(f"Arête dupliquée: {e[0]}-{e[1]}")
            normalized.add(e)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(self.n)))
        if not self.origin:
            object.__setattr__(self, "origin", tuple(range(self.n)))
        if len(self.labels) != self.n or len(self.origin) != self.n:
            raise GraphInputError("Table d'étiquettes de taille incohérente")

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], n: Optional[int] = None, **kwargs) -> "Graph":
        edge_list = [tuple(e) for e in edges]
        if n is None:
            n = 1 + max((max(e) for e in edge_list), default=-1)
        return cls(n=n, edges=tuple(edge_list), **kwargs)

    @cached_property
    def adjacency(self) -> Tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def edge_index(self) -> Dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.adjacency[v]))

    def degree(self, v: int) -> int:
        return bin(self.adjacency[v]).count("1")

    def edge_label(self, e: Edge) -> str:
        return f"{self.labels[e[0]]}-{self.labels[e[1]]}"

    def isolated_vertices(self) -> List[int]:
        return [v for v in range(self.n) if self.adjacency[v] == 0]

    def normalized(self) -> "Graph":
        """Retire les sommets isolés (hypothèse de travail: pas de sommet isolé)"""
        isolated = self.isolated_vertices()
        if not isolated:
            return self if not self.raw else Graph(self.n, self.edges, self.labels, self.origin)
        logger.warning(
            f"⚠️ {len(isolated)} sommet(s) isolé(s) retiré(s): "
            f"{', '.join(self.labels[v] for v in isolated)}"
        )
        keep = [v for v in range(self.n) if self.adjacency[v]]
        return induced_subgraph(self, keep)

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """Image du graphe par la permutation perm (ancien sommet v -> perm[v])"""
        return Graph(self.n, tuple(make_edge(perm[u], perm[v]) for u, v in self.edges))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Sous-graphe induit, renuméroté densément dans l'ordre croissant"""
    keep = sorted(set(vertices))
    position = {v: i for i, v in enumerate(keep)}
    edges = tuple(
        (position[u], position[v]) for u, v in g.edges if u in position and v in position
    )
    return Graph(
        n=len(keep),
        edges=edges,
        labels=tuple(g.labels[v] for v in keep),
        origin=tuple(keep),
    )


def edge_subgraph(g: Graph, edges: Iterable[Edge]) -> Graph:
    """Sous-graphe engendré par des arêtes, sans sommet isolé"""
    chosen = sorted(edges)
    keep = sorted({v for e in chosen for v in e})
    position = {v: i for i, v in enumerate(keep)}
    return Graph(
        n=len(keep),
        edges=tuple((position[u], position[v]) for u, v in chosen),
        labels=tuple(g.labels[v] for v in keep),
        origin=tuple(keep),
    )


def non_adjacent_subgraph(g: Graph, e: Sequence[int]) -> Graph:
    """N_e: les arêtes de g disjointes de e, sommets isolés retirés.

    Le champ origin du résultat donne, pour chaque nouveau sommet, son
    identifiant dans g.
    """
    edge = make_edge(*e)
    if edge not in g.edge_index:
        raise GraphInputError(f"L'arête {edge[0]}-{edge[1]} n'appartient pas au graphe")
    a, b = edge
    return edge_subgraph(g, (f for f in g.edges if a not in f and b not in f))


def max_matching_size(g: Graph, cap: int = 4) -> int:
    """Taille maximale d'un couplage, tronquée à cap"""
    if cap < 1:
        raise GraphInputError(f"cap doit être >= 1 (reçu {cap})")
    masks = [(1 << u) | (1 << v) for u, v in g.edges]
    best = 0

    def search(start: int, used: int, size: int):
        nonlocal best
        if size > best:
            best = size
        if best >= cap:
            return
        free_vertices = g.n - bin(used).count("1")
        if size + min(len(masks) - start, free_vertices // 2) <= best:
            return
        for i in range(start, len(masks)):
            if not masks[i] & used:
                search(i + 1, used | masks[i], size + 1)
                if best >= cap:
                    return

    search(0, 0, 0)
    return min(best, cap)


def enumerate_matchings(g: Graph, max_size: int) -> List[Matching]:
    """Tous les couplages de taille <= max_size, par taille puis ordre lexicographique"""
    if max_size < 0:
        raise GraphInputError(f"max_size doit être >= 0 (reçu {max_size})")
    masks = [(1 << u) | (1 << v) for u, v in g.edges]
    found: List[Matching] = []

    def extend(start: int, used: int, chosen: List[int]):
        found.append(tuple(g.edges[i] for i in chosen))
        if len(chosen) == max_size:
            return
        for i in range(start, len(masks)):
            if not masks[i] & used:
                chosen.append(i)
                extend(i + 1, used | masks[i], chosen)
                chosen.pop()

    extend(0, 0, [])
    return sorted(found, key=lambda m: (len(m), m))


def find_cycle(g: Graph, k: int) -> Optional[List[int]]:
    """Un cycle de longueur k (liste de sommets), ou None"""
    if k < 3:
        raise GraphInputError(f"Un cycle a au moins 3 sommets (reçu k={k})")
    if k > g.n:
        return None
    adj = g.adjacency

    # le plus petit sommet du cycle sert de départ
    def walk(start: int, path: List[int], visited: int, allowed: int) -> bool:
        v = path[-1]
        if len(path) == k:
            return bool(adj[v] >> start & 1)
        for w in iter_bits(adj[v] & allowed & ~visited):
            path.append(w)
            if walk(start, path, visited | (1 << w), allowed):
                return True
            path.pop()
        return False

    full = (1 << g.n) - 1
    for start in range(g.n - k + 1):
        allowed = full & ~((1 << (start + 1)) - 1)
        path = [start]
        if walk(start, path, 1 << start, allowed):
            return path
    return None


def contains_cycle(g: Graph, k: int) -> bool:
    """Vrai si g contient un cycle de longueur k comme sous-graphe"""
    return find_cycle(g, k) is not None


def longest_path_at_least(g: Graph, length: int) -> bool:
    """Vrai si g contient un chemin simple d'au moins length arêtes"""
    if length < 1:
        raise GraphInputError(f"length doit être >= 1 (reçu {length})")
    if length >= g.n:
        return False
    adj = g.adjacency

    def walk(v: int, visited: int, edges_used: int) -> bool:
        if edges_used >= length:
            return True
        for w in iter_bits(adj[v] & ~visited):
            if walk(w, visited | (1 << w), edges_used + 1):
                return True
        return False

    return any(walk(v, 1 << v, 0) for v in range(g.n) if adj[v])


@dataclass(frozen=True)
class StructuralSummary:
    is_connected: bool
    components: Tuple[FrozenSet[int], ...]
    is_bipartite: bool
    bipartition: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]
    degree_sequence: Tuple[int, ...]


def connected_components(g: Graph) -> List[FrozenSet[int]]:
    adj = g.adjacency
    seen = 0
    components = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        component = 1 << v
        frontier = 1 << v
        while frontier:
            reached = 0
            for w in iter_bits(frontier):
                reached |= adj[w]
            frontier = reached & ~component
            component |= frontier
        seen |= component
        components.append(frozenset(iter_bits(component)))
    return components


def structural_predicates(g: Graph) -> StructuralSummary:
    components = connected_components(g)
    color: Dict[int, int] = {}
    bipartite = True
    for component in components:
        root = min(component)
        color[root] = 0
        stack = [root]
        while stack and bipartite:
            v = stack.pop()
            for w in g.neighbors(v):
                if w not in color:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    bipartite = False
                    break
        if not bipartite:
            break
    bipartition = None
    if bipartite:
        bipartition = (
            tuple(v for v in range(g.n) if color[v] == 0),
            tuple(v for v in range(g.n) if color[v] == 1),
        )
    return StructuralSummary(
        is_connected=len(components) <= 1,
        components=tuple(components),
        is_bipartite=bipartite,
        bipartition=bipartition,
        degree_sequence=tuple(sorted((g.degree(v) for v in range(g.n)), reverse=True)),
    )


def edges_pairwise_adjacent(g: Graph) -> bool:
    """Vrai si g est un K3 ou une étoile (toutes les arêtes se touchent)"""
    return all(set(e) & set(f) for e, f in combinations(g.edges, 2))


# Graphes nommés

def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple(make_edge(i, (i + 1) % n) for i in range(n)))


def path_graph(vertex_count: int) -> Graph:
    return Graph(vertex_count, tuple((i, i + 1) for i in range(vertex_count - 1)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(m: int, n: int) -> Graph:
    return Graph(m + n, tuple((i, m + j) for i in range(m) for j in range(n)))


def bowtie_graph() -> Graph:
    return Graph(5, ((0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return Graph(offset, tuple(edges))
