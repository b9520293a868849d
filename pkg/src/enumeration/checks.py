"""Oracles par graphe: chaque vérification compare deux calculs indépendants"""

import logging
from dataclasses import dataclass, field
from typing import List, Tuple

import networkx as nx

from src.classification.classifier import (
    classify_1d,
    classify_2d,
    is_2d_buchsbaum_direct,
    is_2d_buchsbaum_via_ne,
    is_matroid,
)
from src.errors import MatchtopError
from src.graphs.graph import (
    Graph,
    connected_components,
    contains_cycle,
    enumerate_matchings,
    longest_path_at_least,
    max_matching_size,
    non_adjacent_subgraph,
    structural_predicates,
)
from src.topology.complex import (
    SimplicialComplex,
    is_pure,
    link,
    matching_complex,
    one_skeleton_graph,
)
from src.topology.homology import (
    check_boundary_squared_zero,
    euler_check,
    is_buchsbaum_homological,
    is_cm_homological,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckOutcome:
    dim: int
    buchsbaum: bool = False
    cm: bool = False
    families: Tuple[str, ...] = ()
    discrepancies: Tuple[Tuple[str, str], ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.discrepancies


def links_match_ne(g: Graph, c: SimplicialComplex) -> List[Tuple[int, int]]:
    """Arêtes e pour lesquelles lien_{M(G)}(e) diffère de M(N_e) (sous la correspondance des arêtes)"""
    mismatched = []
    for index, e in enumerate(g.edges):
        expected = link(c, (index,)).facets
        ne = non_adjacent_subgraph(g, e)
        if ne.edge_count == 0:
            actual = ((),)
        else:
            back = [g.edge_index[(ne.origin[u], ne.origin[v])] for u, v in ne.edges]
            actual = SimplicialComplex(
                tuple(tuple(back[i] for i in f) for f in matching_complex(ne).facets)
            ).facets
        if expected != actual:
            mismatched.append(e)
    return mismatched


def _structural_violations(g: Graph) -> List[Tuple[str, str]]:
    """Lemmes de structure; ils ne portent que sur les graphes connexes"""
    summary = structural_predicates(g)
    if not summary.is_connected:
        return []
    found = []
    has_c7 = contains_cycle(g, 7)
    if contains_cycle(g, 5) and not has_c7:
        found.append(("c5_implies_c7", "contient C5 sans C7"))
    if contains_cycle(g, 6) and contains_cycle(g, 3) and not has_c7:
        found.append(("c6_c3_implies_c7", "contient C6 et C3 sans C7"))
    if has_c7 and g.n != 7:
        found.append(("c7_seven_vertices", f"contient C7 avec {g.n} sommets"))
    if summary.is_bipartite:
        sides = sorted(len(side) for side in summary.bipartition)
        if 3 not in sides:
            found.append(("bipartite_side_three", f"bipartition de tailles {sides}"))
    return found


def check_graph(g: Graph) -> CheckOutcome:
    """Toutes les vérifications croisées sur un graphe sans sommet isolé"""
    problems: List[Tuple[str, str]] = []

    def guarded(name: str, action):
        try:
            return action()
        except MatchtopError as e:
            problems.append((name, str(e)))
        except Exception as e:
            logger.error(f"❌ Exception inattendue ({name}): {e}")
            problems.append((name, f"{type(e).__name__}: {e}"))
        return None

    capped = max_matching_size(g, 4)
    if g.n <= 8:
        largest = max(len(m) for m in enumerate_matchings(g, 4))
        if largest != capped:
            problems.append(("max_matching", f"borné={capped}, énumération={largest}"))

    guarded("matroid", lambda: is_matroid(g))
    dim = capped - 1
    if dim >= 3 or dim <= 0:
        return CheckOutcome(dim=dim, discrepancies=tuple(problems))

    complex_ = guarded("construction", lambda: matching_complex(g))
    if complex_ is None:
        return CheckOutcome(dim=dim, discrepancies=tuple(problems))

    mismatched = links_match_ne(g, complex_)
    if mismatched:
        problems.append(("link_equals_m_ne", f"arêtes {mismatched}"))
    if not check_boundary_squared_zero(complex_):
        problems.append(("boundary_squared", "∂∂ ≠ 0"))
    if not euler_check(complex_):
        problems.append(("euler", "χ différent de 1 + Σ(-1)^i β̃_i"))

    direct = is_2d_buchsbaum_direct(g)
    via_ne = is_2d_buchsbaum_via_ne(g)
    if direct != via_ne:
        problems.append(("direct_vs_ne", f"direct={direct}, via N_e={via_ne}"))

    if dim == 1:
        result = guarded("families_1d", lambda: classify_1d(g))
        cm = nx.is_connected(one_skeleton_graph(complex_))
        buchsbaum = is_pure(complex_)
        if is_cm_homological(complex_) != cm or is_buchsbaum_homological(complex_) != buchsbaum:
            problems.append(("homology_1d", f"connexe={cm}, pur={buchsbaum}"))
        connected = len(connected_components(g)) == 1
        if cm and connected:
            if not longest_path_at_least(g, 4) or longest_path_at_least(g, 5):
                problems.append(("paths_1d", "chemin de longueur 4 sans chemin de longueur 5 attendu"))
        if g.n == 5 and contains_cycle(g, 5) and result is not None and "G3" not in result.families:
            problems.append(("hamiltonian_g3", f"familles {result.families}"))
    else:
        result = guarded("families_2d", lambda: classify_2d(g))
        buchsbaum = direct
        cm = result.is_cm if result is not None else False
        if is_buchsbaum_homological(complex_) != direct:
            problems.append(("homology_2d", f"combinatoire={direct}"))
        if direct:
            problems.extend(_structural_violations(g))

    families = tuple(result.families) if result is not None else ()
    return CheckOutcome(
        dim=dim, buchsbaum=buchsbaum, cm=cm, families=families, discrepancies=tuple(problems)
    )
