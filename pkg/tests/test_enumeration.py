import pytest
from hypothesis import given, settings

from src.analytics.report import EXPECTED_C7_BUCHSBAUM, EXPECTED_C7_ISO
from src.enumeration import search
from src.enumeration.checks import _structural_violations, check_graph, links_match_ne
from src.enumeration.corpus import (
    C7_CHORDS,
    c7_chord_supergraphs,
    graph_from_mask,
    labeled_graph_count,
    random_graph_masks,
)
from src.enumeration.search import VerificationRunner, minimize_counterexample
from src.errors import CapabilityError
from src.graphs.canonical import canonical_form
from src.graphs.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    edges_pairwise_adjacent,
    path_graph,
)
from src.graphs.graph6 import decode_graph6
from src.topology.complex import matching_complex
from tests.strategies import graphs


@pytest.fixture
def runner(config):
    return VerificationRunner(config, threads=1)


class TestCorpus:
    def test_chords(self):
        assert len(C7_CHORDS) == 14
        assert sum(1 for _ in c7_chord_supergraphs(2)) == 91

    def test_graph_from_mask(self):
        assert graph_from_mask(4, 0) is None
        g = graph_from_mask(4, 1)
        assert g.n == 2 and g.origin == (0, 1)
        assert labeled_graph_count(4) == 64

    def test_random_masks_are_reproducible(self):
        first = random_graph_masks(9, 10, 7, (0.2, 0.4, 0.6))
        assert first == random_graph_masks(9, 10, 7, (0.2, 0.4, 0.6))
        assert [d for d, _ in first].count(0.2) == 4
        assert first != random_graph_masks(9, 10, 8, (0.2, 0.4, 0.6))

    def test_random_masks_empty(self):
        assert random_graph_masks(9, 0, 7, (0.2, 0.4, 0.6)) == []


class TestChecks:
    def test_c7(self, c7):
        outcome = check_graph(c7)
        assert outcome.ok
        assert outcome.dim == 2 and outcome.buchsbaum and not outcome.cm
        assert "B_C7" in outcome.families

    def test_k4(self, k4):
        outcome = check_graph(k4)
        assert outcome.ok
        assert outcome.dim == 1 and outcome.buchsbaum and not outcome.cm

    def test_dimension_three_skips_classification(self):
        outcome = check_graph(cycle_graph(8))
        assert outcome.ok and outcome.dim == 3

    def test_links_match_ne(self, c7):
        assert links_match_ne(c7, matching_complex(c7)) == []

    @pytest.mark.parametrize(
        "g",
        [disjoint_union(cycle_graph(5), path_graph(2)), decode_graph6("FyAoO")],
        ids=["c5_plus_k2", "FyAoO"],
    )
    def test_cycle_lemmas_skip_disconnected_graphs(self, g):
        assert _structural_violations(g) == []
        outcome = check_graph(g)
        assert outcome.dim == 2 and outcome.buchsbaum
        assert outcome.ok, outcome.discrepancies

    def test_cycle_lemmas_apply_to_connected_graphs(self):
        # C5 avec une arête pendante: connexe, C5 sans C7
        g = Graph(6, cycle_graph(5).edges + ((0, 5),))
        assert ("c5_implies_c7", "contient C5 sans C7") in _structural_violations(g)


class TestMinimization:
    def test_minimizes_to_a_triangle(self, monkeypatch):
        def fake_check(g):
            has_triangle = any(
                g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
                for a in range(g.n) for b in range(a + 1, g.n) for c in range(b + 1, g.n)
            )
            problems = (("fake", "triangle"),) if has_triangle else ()
            return search.CheckOutcome(dim=1, discrepancies=problems)

        monkeypatch.setattr(search, "check_graph", fake_check)
        smallest = minimize_counterexample(complete_graph(5), "fake")
        assert smallest.edge_count == 3
        assert edges_pairwise_adjacent(smallest)

    def test_counterexample_written(self, runner, monkeypatch, config):
        monkeypatch.setattr(
            search, "check_graph",
            lambda g: search.CheckOutcome(dim=1, discrepancies=(("fake", "toujours"),)),
        )
        discrepancy = runner._discrepancy(complete_graph(4), "fake", "toujours", minimize=True)
        with open(discrepancy.counterexample_path, encoding="utf-8") as handle:
            lines = [line for line in handle.read().splitlines() if not line.startswith("#")]
        assert len(lines) == 1
        assert discrepancy.counterexample_path.endswith("counterexample_fake.txt")


class TestExhaustive:
    def test_small(self, runner):
        report = runner.exhaustive_verify(4)
        assert report.ok
        assert report.statistics["labeled_graphs"] == 64
        # un représentant par classe: les 10 graphes sans sommet isolé sur au plus 4 sommets
        assert report.statistics["classes_checked"] == 10
        assert report.parameters["coverage"] == "isomorphism_classes"
        found = {canonical_form(decode_graph6(text)) for text in report.notable["buchsbaum_not_cm_1d"]}
        assert found == {canonical_form(complete_graph(4)), canonical_form(cycle_graph(4))}

    @pytest.mark.parametrize("max_n", [1, 8])
    def test_limits(self, runner, max_n):
        with pytest.raises(CapabilityError):
            runner.exhaustive_verify(max_n)

    @pytest.mark.slow
    @pytest.mark.parametrize("max_n", [5, 6])
    def test_sweep(self, runner, max_n):
        assert runner.exhaustive_verify(max_n).ok


class TestRandom:
    def test_empty(self, runner):
        report = runner.random_verify(7, 0, 1)
        assert report.ok
        assert report.statistics["classes_checked"] == 0

    def test_deterministic(self, runner):
        first = runner.random_verify(8, 30, 42)
        second = runner.random_verify(8, 30, 42)
        assert first.ok
        assert first.seed == 42
        assert first.deterministic_dump() == second.deterministic_dump()

    def test_out_of_range(self, runner):
        with pytest.raises(CapabilityError):
            runner.random_verify(6, 10, 1)

    @pytest.mark.slow
    def test_larger_sweep(self, runner):
        assert runner.random_verify(9, 1000, 7).ok

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [7, 8, 9, 10])
    def test_sweep_has_no_discrepancy(self, config, n):
        runner = VerificationRunner(config)
        report = runner.random_verify(n, 20000, 42)
        assert report.statistics["classes_checked"] > 0
        assert report.discrepancies == [], [(d.check, d.graph6) for d in report.discrepancies[:5]]
        assert report.ok


@pytest.mark.slow
def test_c7_table(runner):
    report = runner.scan_c7()
    assert report.ok
    assert tuple(r.iso_classes for r in report.rows) == EXPECTED_C7_ISO
    assert tuple(r.buchsbaum_classes for r in report.rows) == EXPECTED_C7_BUCHSBAUM
    assert report.totals["iso_classes"] == 383
    assert report.totals["buchsbaum_classes"] == 125


@pytest.mark.property_based
@given(graphs(max_n=7, min_edges=1))
@settings(max_examples=80, deadline=None)
def test_vertex_links_are_matching_complexes_of_ne(g):
    assert links_match_ne(g, matching_complex(g)) == []
