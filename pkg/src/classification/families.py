"""Familles de graphes des théorèmes de classification.

Un motif (FamilyPattern) décrit un noyau de sommets nommés: des pivots
(hubs) et des sommets de coeur, avec des arêtes obligatoires et des arêtes
optionnelles; toute autre paire du noyau est interdite. Quand le motif
admet des satellites, chaque sommet hors du noyau doit être adjacent à un
ensemble non vide de pivots, et à rien d'autre.

Les familles procédurales (composantes, pétales, C7, graphes fixes) sont
reconnues par des fonctions dédiées.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from src.errors import ConsistencyError
from src.graphs.canonical import CanonicalForm, canonical_form
from src.graphs.graph import (
    Graph,
    bowtie_graph,
    complete_graph,
    connected_components,
    cycle_graph,
    edges_pairwise_adjacent,
    find_cycle,
    induced_subgraph,
    non_adjacent_subgraph,
)

logger = logging.getLogger(__name__)

PatternEdge = Tuple[str, str]


def _edges(spec: str) -> Tuple[PatternEdge, ...]:
    """'h1-c1 c1-c2' -> (('h1', 'c1'), ('c1', 'c2'))"""
    return tuple(tuple(token.split("-")) for token in spec.split())


@dataclass(frozen=True)
class FamilyPattern:
    family_id: str
    hubs: Tuple[str, ...]
    core: Tuple[str, ...]
    required_edges: Tuple[PatternEdge, ...]
    optional_edges: Tuple[PatternEdge, ...] = ()
    satellites: bool = True
    relation: Dict[FrozenSet[str], str] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        declared = set(self.vertices)
        relation = {}
        for kind, edges in (("required", self.required_edges), ("optional", self.optional_edges)):
            for a, b in edges:
                if a not in declared or b not in declared or a == b:
                    raise ValueError(f"{self.family_id}: arête {a}-{b} mal formée")
                relation[frozenset((a, b))] = kind
        object.__setattr__(self, "relation", relation)

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.hubs + self.core

    def kind(self, a: str, b: str) -> Optional[str]:
        return self.relation.get(frozenset((a, b)))

    def degree_bounds(self, x: str) -> Tuple[int, Optional[int]]:
        required = sum(1 for a, b in self.required_edges if x in (a, b))
        optional = sum(1 for a, b in self.optional_edges if x in (a, b))
        # un sommet de coeur n'est jamais adjacent à un satellite
        if x in self.core or not self.satellites:
            return required, required + optional
        return required, None


class FamilyWitness(BaseModel):
    """Certificat d'appartenance à une famille, vérifiable indépendamment"""

    model_config = ConfigDict(frozen=True)

    family: str
    mapping: Dict[str, int] = Field(default_factory=dict)
    components: List[List[int]] = Field(default_factory=list)
    cycle: List[int] = Field(default_factory=list)


PATTERNS: Dict[str, FamilyPattern] = {
    p.family_id: p
    for p in (
        # dimension 1
        FamilyPattern(
            "G1", ("h1", "h2"), ("c1", "c2", "c3"),
            _edges("c1-h1 c2-h1 c2-h2 c3-h2"),
            _edges("c1-h2 c3-h1"),
        ),
        FamilyPattern(
            "G2", ("h1",), ("c1", "c2", "c3", "c4"),
            _edges("c1-c2 c2-c3 c1-c3 c3-h1 h1-c4"),
            _edges("c1-h1 c2-h1"),
        ),
        FamilyPattern(
            "G3", (), ("c1", "c2", "c3", "c4", "c5"),
            _edges("c1-c2 c2-c3 c3-c4 c4-c5 c1-c5"),
            _edges("c1-c3 c1-c4 c2-c4 c2-c5 c3-c5"),
            satellites=False,
        ),
        FamilyPattern(
            "BOWTIE", (), ("c1", "c2", "c3", "c4", "c5"),
            _edges("c1-c2 c2-c3 c1-c3 c3-c4 c4-c5 c3-c5"),
            satellites=False,
        ),
        # dimension 2
        FamilyPattern(
            "B1", ("h1", "h2", "h3"), ("c1", "c2", "c3"),
            _edges("c1-h1 c2-h2 c3-h3"),
        ),
        FamilyPattern(
            "B2", ("h1", "h2", "h3"), ("c1", "c2", "c3", "c4"),
            _edges("c1-h1 c1-h2 c3-h1 c3-h2 c2-h2 c2-h3 c4-h2 c4-h3"),
        ),
        FamilyPattern(
            "B3", ("h1", "h2", "h3"), ("c1", "c2", "c3", "c4"),
            _edges("c1-h1 c1-h2 c1-h3 c2-h1 c2-h2 c3-h2 c3-h3 c4-h3 c4-h1"),
            _edges("c2-h3 c3-h1 c4-h2"),
        ),
        FamilyPattern(
            "B4", ("h1", "h2", "h3"), ("c1", "c2", "c3", "c4", "c5"),
            _edges("c1-h2 c1-h3 c2-h1 c2-h2 c3-h2 c3-h3 c4-h3 c4-h1 c5-h1"),
            _edges("c2-h3 c3-h1 c4-h2"),
        ),
        FamilyPattern(
            "B5", ("h1", "h2", "h3"), ("c1", "c2", "c3", "c4", "c5"),
            _edges("c1-h1 c1-h2 c2-h1 c3-h1 c3-h2 c3-h3 c4-h3 c5-h2 c5-h3"),
            _edges("c1-h3 c2-h2 c4-h2 c5-h1"),
        ),
        FamilyPattern(
            "B6", ("h1", "h2", "h3"), ("c1", "c2", "c3", "c4", "c5"),
            _edges("c1-h1 c2-h1 c2-h2 c3-h2 c4-h3 c5-h2 c5-h3"),
            _edges("c2-h3 c3-h3 c4-h2"),
        ),
        FamilyPattern(
            "B7", ("h1",), ("c1", "c2", "c3", "c4", "c5", "c6", "c7"),
            _edges("c1-c2 c2-c3 c1-c3 c4-c5 c5-c6 c4-c6 c1-h1 c4-h1 c7-h1"),
            _edges("c2-h1 c3-h1 c5-h1 c6-h1"),
        ),
        FamilyPattern(
            "B8", ("h1", "h2"), ("c1", "c2", "c3", "c4", "c5", "c6"),
            _edges("c1-c2 c2-c3 c1-c3 c1-h1 h1-c4 c4-h2 h2-c6 h1-c5"),
            _edges("c2-h1 c3-h1 c5-h2 h1-c6"),
        ),
        FamilyPattern(
            "B9", ("h1", "h2"), ("c1", "c2", "c3", "c4", "c5", "c6"),
            _edges("h2-c1 c1-c2 c2-c3 c1-c3 c1-h1 h1-c6 c6-h2 h2-c5 h1-c4"),
            _edges("h2-c4 h1-c5"),
        ),
    )
}

FAMILIES_1D = ("DISC_1D", "G1", "G2", "G3", "BOWTIE", "K4", "C4")
FAMILIES_2D = (
    "DISC_2D_3COMP", "DISC_2D_2COMP", "B_C7", "B_P",
    "B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "B9", "E1", "E2",
)
CM_FAMILIES_1D = ("DISC_1D", "G1", "G2", "G3", "BOWTIE")


def recognize_family(g: Graph, pattern: FamilyPattern) -> Optional[FamilyWitness]:
    """Cherche une injection du noyau du motif dans g respectant les règles"""
    order = pattern.vertices
    size = len(order)
    if g.n < size or (not pattern.satellites and g.n != size):
        return None
    if g.edge_count < len(pattern.required_edges):
        return None

    adj = g.adjacency
    bounds = [pattern.degree_bounds(x) for x in order]
    kinds = [[pattern.kind(order[i], order[j]) for j in range(size)] for i in range(size)]
    hub_count = len(pattern.hubs)
    assignment: List[int] = []

    def satellites_ok(used: int, hub_mask: int, final: bool) -> bool:
        outside = [v for v in range(g.n) if not used >> v & 1]
        if final:
            return all(adj[v] and not adj[v] & ~hub_mask for v in outside)
        forced = sum(1 for v in outside if adj[v] & ~hub_mask)
        return forced <= size - hub_count

    def extend(i: int, used: int, hub_mask: int) -> bool:
        if i == hub_count and pattern.satellites and not satellites_ok(used, hub_mask, False):
            return False
        if i == size:
            return satellites_ok(used, hub_mask, True)
        low, high = bounds[i]
        for v in range(g.n):
            if used >> v & 1:
                continue
            degree = bin(adj[v]).count("1")
            if degree < low or (high is not None and degree > high):
                continue
            compatible = True
            for j, w in enumerate(assignment):
                has = bool(adj[v] >> w & 1)
                kind = kinds[i][j]
                if (kind == "required" and not has) or (kind is None and has):
                    compatible = False
                    break
            if not compatible:
                continue
            assignment.append(v)
            mask = hub_mask | (1 << v) if i < hub_count else hub_mask
            if extend(i + 1, used | (1 << v), mask):
                return True
            assignment.pop()
        return False

    if not extend(0, 0, 0):
        return None
    return FamilyWitness(family=pattern.family_id, mapping=dict(zip(order, assignment)))


def verify_witness(g: Graph, pattern: FamilyPattern, witness: FamilyWitness) -> bool:
    """Revérifie un témoin: arêtes du noyau et règle des satellites"""
    mapping = witness.mapping
    if set(mapping) != set(pattern.vertices) or len(set(mapping.values())) != len(mapping):
        return False
    for a, b in pattern.required_edges:
        if not g.has_edge(mapping[a], mapping[b]):
            return False
    names = list(pattern.vertices)
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            if pattern.kind(a, b) is None and g.has_edge(mapping[a], mapping[b]):
                return False
    hubs = {mapping[h] for h in pattern.hubs}
    core = set(mapping.values())
    for v in range(g.n):
        if v in core:
            continue
        if not pattern.satellites:
            return False
        neighbors = set(g.neighbors(v))
        if not neighbors or not neighbors <= hubs:
            return False
    return True


def pattern_instances(pattern: FamilyPattern) -> List[Graph]:
    """Les graphes du noyau seul, pour chaque sous-ensemble d'arêtes optionnelles"""
    position = {name: i for i, name in enumerate(pattern.vertices)}
    required = [(position[a], position[b]) for a, b in pattern.required_edges]
    optional = [(position[a], position[b]) for a, b in pattern.optional_edges]
    graphs = []
    for choice in product((False, True), repeat=len(optional)):
        chosen = [e for e, keep in zip(optional, choice) if keep]
        graphs.append(Graph(len(position), tuple(required + chosen)))
    return graphs


# Familles procédurales

def _components(g: Graph) -> List[Graph]:
    return [induced_subgraph(g, sorted(c)) for c in connected_components(g)]


def _component_witness(family: str, g: Graph) -> FamilyWitness:
    return FamilyWitness(
        family=family, components=[sorted(c) for c in connected_components(g)]
    )


def recognize_two_small_components(g: Graph) -> Optional[FamilyWitness]:
    """Deux composantes, chacune K3 ou étoile"""
    parts = _components(g)
    if len(parts) == 2 and all(edges_pairwise_adjacent(p) for p in parts):
        return _component_witness("DISC_1D", g)
    return None


def recognize_three_small_components(g: Graph) -> Optional[FamilyWitness]:
    """Trois composantes, chacune K3 ou étoile"""
    parts = _components(g)
    if len(parts) == 3 and all(edges_pairwise_adjacent(p) for p in parts):
        return _component_witness("DISC_2D_3COMP", g)
    return None


def recognize_small_plus_cm_component(g: Graph) -> Optional[FamilyWitness]:
    """Deux composantes: un K3 ou une étoile, et un graphe de G1, G2, G3 ou le noeud papillon"""
    parts = _components(g)
    if len(parts) != 2:
        return None
    for small, other in (parts, parts[::-1]):
        if not edges_pairwise_adjacent(small):
            continue
        for family in ("G1", "G2", "G3", "BOWTIE"):
            if recognize_family(other, PATTERNS[family]) is not None:
                return _component_witness("DISC_2D_2COMP", g)
    return None


def _petal_kind(g: Graph, center: int, component: FrozenSet[int]) -> Optional[str]:
    inner = [e for e in g.edges if e[0] in component and e[1] in component]
    attached = {v for v in component if g.has_edge(center, v)}
    if len(component) == 2 and len(inner) == 1 and attached == set(component):
        return "K3"
    if not inner or len(inner) != len(component) - 1:
        return None
    for hub in component:
        if all(hub in e for e in inner) and attached == {hub}:
            return "star"
    return None


def recognize_petal(g: Graph) -> Optional[FamilyWitness]:
    """Sommet central c tel que g - c a exactement trois pétales (K3 ou étoile collée par une feuille)"""
    for center in range(g.n):
        rest = induced_subgraph(g, [v for v in range(g.n) if v != center])
        pieces = [frozenset(rest.origin[v] for v in c) for c in connected_components(rest)]
        if len(pieces) != 3:
            continue
        if all(_petal_kind(g, center, piece) for piece in pieces):
            return FamilyWitness(
                family="B_P",
                mapping={"center": center},
                components=[sorted(piece) for piece in pieces],
            )
    return None


def _fixed_graph(n: int, spec: str) -> Graph:
    return Graph(n, tuple((int(a), int(b)) for a, b in (t.split("-") for t in spec.split())))


FIXED_GRAPHS: Dict[str, Graph] = {
    "K4": complete_graph(4),
    "C4": cycle_graph(4),
    # deux K4 partageant le sommet 0
    "E1": _fixed_graph(7, "0-1 0-2 0-3 1-2 1-3 2-3 0-4 0-5 0-6 4-5 4-6 5-6"),
    # K4 sur 0,1,2,3 puis 0-4 4-5 5-6 0-6
    "E2": _fixed_graph(7, "0-1 0-2 0-3 1-2 1-3 2-3 0-4 4-5 5-6 0-6"),
}


@lru_cache(maxsize=None)
def fixed_graph_form(family: str) -> CanonicalForm:
    return canonical_form(FIXED_GRAPHS[family])


def recognize_fixed(g: Graph, family: str) -> Optional[FamilyWitness]:
    target = FIXED_GRAPHS[family]
    if g.n != target.n or g.edge_count != target.edge_count:
        return None
    if canonical_form(g) != fixed_graph_form(family):
        return None
    return FamilyWitness(family=family)


@lru_cache(maxsize=None)
def admissible_c7_ne_forms() -> FrozenSet[CanonicalForm]:
    """Graphes à 5 sommets admis comme N_e dans un graphe Buchsbaum contenant C7"""
    candidates = [
        Graph(5, ((0, 1), (1, 2), (3, 4))),
        Graph(5, ((0, 1), (1, 2), (0, 2), (3, 4))),
        bowtie_graph(),
    ]
    for family in ("G1", "G2", "G3"):
        candidates.extend(pattern_instances(PATTERNS[family]))
    return frozenset(canonical_form(c) for c in candidates)


def inadmissible_c7_edges(g: Graph) -> List[Tuple[int, int]]:
    """Arêtes e dont N_e n'est pas un graphe admis pour un graphe contenant C7"""
    allowed = admissible_c7_ne_forms()
    offending = []
    for e in g.edges:
        ne = non_adjacent_subgraph(g, e)
        if ne.n != 5 or canonical_form(ne) not in allowed:
            offending.append(e)
    return offending


def recognize_bc7(g: Graph, is_buchsbaum: Callable[[Graph], bool]) -> Optional[FamilyWitness]:
    """Graphe à 7 sommets contenant C7 et de M(G) Buchsbaum de dimension 2"""
    if g.n != 7:
        return None
    cycle = find_cycle(g, 7)
    if cycle is None or not is_buchsbaum(g):
        return None
    offending = inadmissible_c7_edges(g)
    if offending:
        raise ConsistencyError(
            f"N_e hors de la liste admise pour les arêtes {offending} d'un graphe contenant C7"
        )
    return FamilyWitness(family="B_C7", cycle=cycle)
