"""Balayage de C7 par cordes et campagnes de vérification (exhaustive, aléatoire).

Les calculs par graphe sont distribués sur un pool de processus avec un map
qui préserve l'ordre; la déduplication par forme canonique est une réduction
séquentielle, si bien qu'un seul processus produit le même rapport.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence, Tuple, TypeVar

from src.analytics.report import (
    Discrepancy,
    EnumerationReport,
    EnumerationRow,
    compare_with_reference,
    summarize_rows,
)
from src.classification.classifier import is_2d_buchsbaum_direct
from src.config import Config
from src.enumeration.checks import CheckOutcome, check_graph
from src.enumeration.corpus import (
    c7_chord_supergraphs,
    graph_from_mask,
    labeled_graph_count,
    random_graph_masks,
    vertex_pairs,
)
from src.errors import CapabilityError
from src.graphs.canonical import canonical_form
from src.graphs.graph import Graph, edge_subgraph
from src.graphs.graph6 import encode_graph6
from src.storage.report_writer import ReportWriter, graph_to_edge_list

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def _certificate(g: Graph) -> bytes:
    return canonical_form(g).certificate


def _mask_certificates(task: Tuple[int, int, int]) -> List[Optional[bytes]]:
    n, start, stop = task
    pairs = vertex_pairs(n)
    certificates = []
    for mask in range(start, stop):
        g = graph_from_mask(n, mask, pairs)
        certificates.append(None if g is None else _certificate(g))
    return certificates


def minimize_counterexample(g: Graph, check: str) -> Graph:
    """Suppression gloutonne d'arêtes tant que la divergence nommée persiste"""

    def still_fails(h: Graph) -> bool:
        return h.edge_count > 0 and any(name == check for name, _ in check_graph(h).discrepancies)

    current = g
    shrinking = True
    while shrinking:
        shrinking = False
        for e in current.edges:
            candidate = edge_subgraph(current, (f for f in current.edges if f != e))
            if still_fails(candidate):
                current = candidate
                shrinking = True
                break
    logger.info(f"🔍 Contre-exemple {check} minimisé: {g.edge_count} → {current.edge_count} arêtes")
    return current


class VerificationRunner:
    def __init__(self, config: Config, threads: Optional[int] = None):
        self.config = config
        self.threads = threads if threads and threads > 0 else config.threads
        self.writer = ReportWriter(config)

    def parallel_map(self, func: Callable[[T], R], items: Sequence[T], chunksize: int = 64) -> List[R]:
        """map qui préserve l'ordre; exécution locale si un seul processus"""
        if self.threads <= 1 or len(items) <= chunksize:
            return [func(item) for item in items]
        with ProcessPoolExecutor(max_workers=self.threads) as pool:
            return list(pool.map(func, items, chunksize=chunksize))

    def _dedup(self, graphs: List[Graph], seen: Optional[set] = None) -> List[Graph]:
        seen = set() if seen is None else seen
        certificates = self.parallel_map(_certificate, graphs)
        survivors = []
        for g, certificate in zip(graphs, certificates):
            if certificate not in seen:
                seen.add(certificate)
                survivors.append(g)
        return survivors

    def scan_c7(self) -> EnumerationReport:
        """Sur-graphes de C7 par nombre de cordes, classes d'isomorphisme et classes Buchsbaum"""
        logger.info("🚀 Balayage des sur-graphes de C7 (2^14 ensembles de cordes)")
        start = time.time()
        rows = []
        global_forms: set = set()
        global_buchsbaum = 0
        for k in range(15):
            representatives = self._dedup(list(c7_chord_supergraphs(k)))
            flags = self.parallel_map(is_2d_buchsbaum_direct, representatives, chunksize=8)
            rows.append(
                EnumerationRow(k=k, iso_classes=len(representatives), buchsbaum_classes=sum(flags))
            )
            for g, flag in zip(representatives, flags):
                certificate = _certificate(g)
                if certificate not in global_forms:
                    global_forms.add(certificate)
                    global_buchsbaum += int(flag)
            logger.info(f"  k={k:2d}: {len(representatives)} classes, {sum(flags)} Buchsbaum")

        discrepancies = [
            Discrepancy(check="c7_table", detail=problem, graph6="", edge_list="")
            for problem in compare_with_reference(rows)
        ]
        totals = summarize_rows(rows)
        totals.update(
            {"global_iso_classes": len(global_forms), "global_buchsbaum_classes": global_buchsbaum}
        )
        return EnumerationReport(
            kind="scan_c7",
            rows=rows,
            totals=totals,
            discrepancies=discrepancies,
            runtime_seconds=round(time.time() - start, 3),
        )

    def _verify(self, graphs: List[Graph]) -> Tuple[Dict[str, int], Dict[str, List[str]], List[Discrepancy]]:
        outcomes: List[CheckOutcome] = self.parallel_map(check_graph, graphs, chunksize=4)
        statistics = {"classes_checked": len(graphs)}
        notable: Dict[str, List[str]] = {"buchsbaum_not_cm_1d": []}
        discrepancies: List[Discrepancy] = []
        reported = set()
        for g, outcome in zip(graphs, outcomes):
            key = f"dim_{outcome.dim}" if outcome.dim <= 2 else "dim_3_plus"
            statistics[key] = statistics.get(key, 0) + 1
            if outcome.dim == 2 and outcome.buchsbaum:
                statistics["buchsbaum_2d"] = statistics.get("buchsbaum_2d", 0) + 1
            if outcome.dim == 1 and outcome.cm:
                statistics["cm_1d"] = statistics.get("cm_1d", 0) + 1
            if outcome.dim == 1 and outcome.buchsbaum and not outcome.cm:
                notable["buchsbaum_not_cm_1d"].append(encode_graph6(g))
            for check, detail in outcome.discrepancies:
                discrepancies.append(self._discrepancy(g, check, detail, check not in reported))
                reported.add(check)
        return statistics, notable, discrepancies

    def _discrepancy(self, g: Graph, check: str, detail: str, minimize: bool) -> Discrepancy:
        logger.error(f"❌ Divergence {check} sur {encode_graph6(g)}: {detail}")
        path = None
        if minimize:
            smallest = minimize_counterexample(g, check)
            path = str(self.writer.write_counterexample(smallest, check))
        return Discrepancy(
            check=check,
            detail=detail,
            graph6=encode_graph6(g),
            edge_list=graph_to_edge_list(g),
            counterexample_path=path,
        )

    def exhaustive_verify(self, max_n: int) -> EnumerationReport:
        """Graphes étiquetés sur max_n sommets, sommets isolés retirés.

        Tous les graphes étiquetés sont énumérés; les vérifications portent sur
        un représentant par classe d'isomorphisme. Le rapport le signale par
        parameters["coverage"] = "isomorphism_classes".
        """
        if max_n > self.config.MAX_EXHAUSTIVE_N:
            raise CapabilityError(
                f"Vérification exhaustive limitée à n <= {self.config.MAX_EXHAUSTIVE_N} (reçu {max_n})"
            )
        if max_n < 2:
            raise CapabilityError(f"max_n doit être >= 2 (reçu {max_n})")
        logger.info(f"🚀 Vérification exhaustive jusqu'à {max_n} sommets")
        start = time.time()
        total = labeled_graph_count(max_n)
        step = 4096
        tasks = [(max_n, lo, min(lo + step, total)) for lo in range(0, total, step)]
        chunks = self.parallel_map(_mask_certificates, tasks, chunksize=1)

        pairs = vertex_pairs(max_n)
        seen = set()
        representatives = []
        for (_, lo, _), certificates in zip(tasks, chunks):
            for offset, certificate in enumerate(certificates):
                if certificate is None or certificate in seen:
                    continue
                seen.add(certificate)
                representatives.append(graph_from_mask(max_n, lo + offset, pairs))
        logger.info(f"📊 {total:,} graphes étiquetés, {len(representatives)} classes d'isomorphisme")

        statistics, notable, discrepancies = self._verify(representatives)
        statistics["labeled_graphs"] = total
        return EnumerationReport(
            kind="exhaustive",
            parameters={"max_n": max_n, "coverage": "isomorphism_classes"},
            statistics=statistics,
            notable=notable,
            discrepancies=discrepancies,
            runtime_seconds=round(time.time() - start, 3),
        )

    def random_verify(self, n: int, count: int, seed: int) -> EnumerationReport:
        """Tirages d'Erdős–Rényi aux densités configurées, reproductibles par la graine"""
        low, high = self.config.RANDOM_N_RANGE
        if not low <= n <= high:
            raise CapabilityError(f"n doit être dans {low}..{high} (reçu {n})")
        logger.info(f"🚀 Vérification aléatoire: n={n}, {count} tirages, graine={seed}")
        start = time.time()
        pairs = vertex_pairs(n)
        graphs = []
        for _, mask in random_graph_masks(n, count, seed, self.config.RANDOM_DENSITIES):
            g = graph_from_mask(n, mask, pairs)
            if g is not None:
                graphs.append(g)
        representatives = self._dedup(graphs)
        statistics, notable, discrepancies = self._verify(representatives)
        statistics["draws"] = count
        return EnumerationReport(
            kind="random",
            parameters={"n": n, "count": count, "densities": list(self.config.RANDOM_DENSITIES)},
            seed=seed,
            statistics=statistics,
            notable=notable,
            discrepancies=discrepancies,
            runtime_seconds=round(time.time() - start, 3),
        )
