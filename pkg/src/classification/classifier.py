"""Procédures de décision: Buchsbaum / Cohen-Macaulay pour M(G) en dimension 1 et 2.

Chaque verdict est calculé directement sur M(G); les familles reconnues sont
calculées séparément et doivent concorder avec le verdict.
"""

import logging
from typing import Dict, List, Literal, Optional, Tuple

import networkx as nx
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from src.classification.families import (
    CM_FAMILIES_1D,
    FAMILIES_1D,
    FAMILIES_2D,
    PATTERNS,
    FamilyWitness,
    recognize_bc7,
    recognize_family,
    recognize_fixed,
    recognize_petal,
    recognize_small_plus_cm_component,
    recognize_three_small_components,
    recognize_two_small_components,
    verify_witness,
)
from src.errors import CapabilityError, ConsistencyError, PreconditionError
from src.graphs.graph import (
    Graph,
    complete_bipartite,
    connected_components,
    edges_pairwise_adjacent,
    induced_subgraph,
    longest_path_at_least,
    max_matching_size,
    non_adjacent_subgraph,
)
from src.topology.complex import (
    is_pure,
    link,
    matching_complex,
    one_skeleton_graph,
    one_skeleton_is_connected_graph_with_edge,
)
from src.topology.homology import is_buchsbaum_homological, is_cm_homological

logger = logging.getLogger(__name__)


class Certificate(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["witness", "failing_edge", "degenerate", "homological"]
    witnesses: List[FamilyWitness] = Field(default_factory=list)
    failing_edge: Optional[Tuple[int, int]] = None
    failing_edge_label: Optional[str] = None
    reason: Optional[str] = None


class ClassificationResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    dim_of_matching_complex: int
    is_buchsbaum: bool
    is_cm: bool
    families: List[str]
    certificate: Certificate
    is_matroid: bool
    link_connected: Optional[bool] = None

    def to_payload(self) -> Dict[str, object]:
        payload = {
            "dim": self.dim_of_matching_complex,
            "buchsbaum": self.is_buchsbaum,
            "cm": self.is_cm,
            "families": self.families,
            "certificate": self.certificate.model_dump(mode="json", exclude_none=True),
            "matroid": self.is_matroid,
        }
        if self.link_connected is not None:
            payload["link_connected"] = self.link_connected
        return payload


def matching_complex_dimension(g: Graph) -> int:
    return max_matching_size(g, cap=max(1, g.n // 2)) - 1 if g.edge_count else -1


def failing_edge(g: Graph) -> Optional[Tuple[Tuple[int, int], str]]:
    """Première arête e (ordre des arêtes) telle que M(N_e) n'est pas un graphe connexe avec une arête"""
    for e in g.edges:
        ne = non_adjacent_subgraph(g, e)
        if ne.edge_count == 0:
            return e, "N_e sans arête: M(N_e) est vide"
        complex_ = matching_complex(ne)
        if complex_.dimension != 1:
            return e, f"M(N_e) de dimension {complex_.dimension}"
        if not one_skeleton_is_connected_graph_with_edge(complex_):
            return e, "M(N_e) non connexe"
    return None


def is_2d_buchsbaum_direct(g: Graph) -> bool:
    """Chaque lien de sommet de M(G) est un graphe connexe avec au moins une arête"""
    g = g.normalized()
    if g.edge_count == 0 or max_matching_size(g, 4) != 3:
        return False
    complex_ = matching_complex(g)
    return all(
        one_skeleton_is_connected_graph_with_edge(link(complex_, (v,)))
        for v in complex_.vertices
    )


def is_2d_buchsbaum_via_ne(g: Graph) -> bool:
    g = g.normalized()
    if g.edge_count == 0:
        return False
    return failing_edge(g) is None


def is_1d_cm_graph(g: Graph) -> bool:
    """Verdict CM en dimension 1 lu sur les familles seules"""
    return any(_recognize(g, family) for family in CM_FAMILIES_1D)


def is_1d_buchsbaum_graph(g: Graph) -> bool:
    return is_1d_cm_graph(g) or any(_recognize(g, family) for family in ("K4", "C4"))


def _recognize(g: Graph, family: str, buchsbaum: Optional[bool] = None) -> Optional[FamilyWitness]:
    if family in PATTERNS:
        witness = recognize_family(g, PATTERNS[family])
        if witness is not None and not verify_witness(g, PATTERNS[family], witness):
            raise ConsistencyError(f"Témoin {family} invalide: {witness.mapping}")
        return witness
    if family in ("K4", "C4", "E1", "E2"):
        return recognize_fixed(g, family)
    if family == "DISC_1D":
        return recognize_two_small_components(g)
    if family == "DISC_2D_3COMP":
        return recognize_three_small_components(g)
    if family == "DISC_2D_2COMP":
        return recognize_small_plus_cm_component(g)
    if family == "B_P":
        return recognize_petal(g)
    if family == "B_C7":
        return recognize_bc7(g, lambda _: bool(buchsbaum))
    raise ValueError(f"Famille inconnue: {family}")


def recognize_families(g: Graph, families, buchsbaum: Optional[bool] = None) -> List[FamilyWitness]:
    witnesses = []
    for family in families:
        witness = _recognize(g, family, buchsbaum)
        if witness is not None:
            witnesses.append(witness)
    return witnesses


def _require_dimension(g: Graph, expected: int) -> int:
    dim = matching_complex_dimension(g)
    if dim != expected:
        raise PreconditionError(
            f"dim M(G) = {dim}, dimension {expected} attendue", actual_dimension=dim
        )
    return dim


def _failure_certificate(g: Graph) -> Certificate:
    found = failing_edge(g)
    if found is None:
        return Certificate(kind="failing_edge", reason="aucune arête fautive trouvée")
    e, reason = found
    return Certificate(
        kind="failing_edge", failing_edge=e, failing_edge_label=g.edge_label(e), reason=reason
    )


def _isolated_vertex_certificate(g: Graph) -> Certificate:
    for e in g.edges:
        if non_adjacent_subgraph(g, e).edge_count == 0:
            return Certificate(
                kind="failing_edge",
                failing_edge=e,
                failing_edge_label=g.edge_label(e),
                reason="arête adjacente à toutes les autres: sommet isolé de M(G)",
            )
    return Certificate(kind="failing_edge", reason="M(G) non connexe")


def classify_1d(g: Graph) -> ClassificationResult:
    g = g.normalized()
    _require_dimension(g, 1)
    complex_ = matching_complex(g)
    cm = nx.is_connected(one_skeleton_graph(complex_))
    buchsbaum = is_pure(complex_)

    witnesses = recognize_families(g, FAMILIES_1D)
    families = [w.family for w in witnesses]
    cm_by_family = any(f in CM_FAMILIES_1D for f in families)
    buchsbaum_by_family = bool(families)
    if cm != cm_by_family or buchsbaum != buchsbaum_by_family:
        raise ConsistencyError(
            f"Dimension 1: M(G) donne cm={cm}, buchsbaum={buchsbaum}; "
            f"familles {families} donnent cm={cm_by_family}, buchsbaum={buchsbaum_by_family}"
        )

    if witnesses:
        certificate = Certificate(kind="witness", witnesses=witnesses)
    else:
        certificate = _isolated_vertex_certificate(g)
    return ClassificationResult(
        dim_of_matching_complex=1,
        is_buchsbaum=buchsbaum,
        is_cm=cm,
        families=families,
        certificate=certificate,
        is_matroid=is_matroid(g),
    )


def classify_2d(g: Graph) -> ClassificationResult:
    g = g.normalized()
    _require_dimension(g, 2)
    buchsbaum = is_2d_buchsbaum_direct(g)
    witnesses = recognize_families(g, FAMILIES_2D, buchsbaum)
    families = [w.family for w in witnesses]
    if buchsbaum != bool(families):
        raise ConsistencyError(
            f"Dimension 2: verdict direct buchsbaum={buchsbaum} mais familles {families}"
        )

    # CM implique Buchsbaum
    cm = buchsbaum and is_cm_homological(matching_complex(g))
    certificate = (
        Certificate(kind="witness", witnesses=witnesses) if witnesses else _failure_certificate(g)
    )
    connected = len(connected_components(g)) == 1
    return ClassificationResult(
        dim_of_matching_complex=2,
        is_buchsbaum=buchsbaum,
        is_cm=cm,
        families=families,
        certificate=certificate,
        is_matroid=is_matroid(g),
        link_connected=is_link_connected(g) if connected else None,
    )


def classify(g: Graph) -> ClassificationResult:
    """Classifieur principal: dispatch selon dim M(G)"""
    g = g.normalized()
    if g.edge_count == 0:
        return ClassificationResult(
            dim_of_matching_complex=-1,
            is_buchsbaum=True,
            is_cm=True,
            families=[],
            certificate=Certificate(kind="degenerate", reason="graphe sans arête: M(G) = {∅}"),
            is_matroid=True,
        )
    dim = matching_complex_dimension(g)
    logger.debug(f"dim M(G) = {dim} pour {g.n} sommets, {g.edge_count} arêtes")
    if dim == 1:
        return classify_1d(g)
    if dim == 2:
        return classify_2d(g)

    complex_ = matching_complex(g)
    return ClassificationResult(
        dim_of_matching_complex=dim,
        is_buchsbaum=is_buchsbaum_homological(complex_),
        is_cm=is_cm_homological(complex_),
        families=[],
        certificate=Certificate(
            kind="degenerate" if dim == 0 else "homological",
            reason=f"dim M(G) = {dim}: verdicts homologiques seulement",
        ),
        is_matroid=is_matroid(g),
    )


def is_link_connected(g: Graph) -> bool:
    """N_e connexe pour toute arête e (N_e vide compte comme non connexe)"""
    if len(connected_components(g.normalized())) != 1:
        raise PreconditionError("is_link_connected exige un graphe connexe")
    for e in g.edges:
        ne = non_adjacent_subgraph(g, e)
        if ne.n == 0 or len(connected_components(ne)) != 1:
            return False
    return True


def is_matroid(g: Graph) -> bool:
    """M(G) est un matroïde ssi g n'a pas de chemin de longueur 3"""
    by_paths = g.edge_count == 0 or not longest_path_at_least(g, 3)
    by_components = all(
        edges_pairwise_adjacent(induced_subgraph(g, sorted(c))) for c in connected_components(g)
    )
    if by_paths != by_components:
        raise ConsistencyError(
            f"Critère matroïde: chemins={by_paths}, étoiles et triangles={by_components}"
        )
    return by_paths


class KmnVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    m: int
    n: int
    cm_predicted: bool
    cm_computed: bool
    buchsbaum_predicted: bool
    buchsbaum_computed: bool


def kmn_thresholds(m: int, n: int) -> KmnVerdict:
    """Seuils K_{m,n}: CM ssi n >= 2m-1, Buchsbaum ssi n >= 2m-2"""
    if not (1 <= m <= n <= 8 and m <= 3):
        raise CapabilityError(f"K_{{{m},{n}}} hors de la plage 1 <= m <= n <= 8, m <= 3")
    complex_ = matching_complex(complete_bipartite(m, n))
    return KmnVerdict(
        m=m,
        n=n,
        cm_predicted=n >= 2 * m - 1,
        cm_computed=is_cm_homological(complex_),
        buchsbaum_predicted=n >= 2 * m - 2,
        buchsbaum_computed=is_buchsbaum_homological(complex_),
    )


def kmn_table(max_m: int = 3, max_n: int = 7) -> pd.DataFrame:
    rows = [
        kmn_thresholds(m, n).model_dump()
        for m in range(1, max_m + 1)
        for n in range(m, max_n + 1)
    ]
    df = pd.DataFrame(rows)
    df["agrees"] = (df["cm_predicted"] == df["cm_computed"]) & (
        df["buchsbaum_predicted"] == df["buchsbaum_computed"]
    )
    logger.info(f"📊 K_m,n: {int(df['agrees'].sum())}/{len(df)} cas conformes aux seuils")
    return df
