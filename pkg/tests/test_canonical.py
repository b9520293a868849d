import networkx as nx
import pytest
from hypothesis import given, settings

from src.enumeration.corpus import c7_chord_supergraphs
from src.errors import CapabilityError
from src.graphs.canonical import are_isomorphic, canonical_form, canonical_graph, dedup_by_iso
from src.graphs.graph import Graph, complete_graph, cycle_graph, path_graph, star_graph
from tests.strategies import graphs, graphs_with_permutation


def test_relabeled_cycles_agree():
    a = Graph(4, ((0, 1), (1, 2), (2, 3), (0, 3)))
    b = Graph(4, ((0, 2), (1, 2), (1, 3), (0, 3)))
    assert canonical_form(a) == canonical_form(b)


def test_path_equals_star():
    assert canonical_form(path_graph(3)) == canonical_form(star_graph(2))


def test_different_graphs_differ():
    k4_minus_edge = Graph(4, tuple(e for e in complete_graph(4).edges if e != (0, 1)))
    assert canonical_form(k4_minus_edge) != canonical_form(cycle_graph(4))


def test_canonical_graph_is_fixed_point():
    g = Graph(6, ((0, 3), (3, 5), (1, 5), (2, 4)))
    assert canonical_graph(canonical_graph(g)) == canonical_graph(g)


def test_capability_limit():
    with pytest.raises(CapabilityError):
        canonical_form(cycle_graph(17))


def test_dedup_one_chord():
    assert len(dedup_by_iso(c7_chord_supergraphs(1))) == 2


def test_dedup_single():
    g = cycle_graph(5)
    assert dedup_by_iso([g]) == [g]


@pytest.mark.property_based
@given(graphs_with_permutation(max_n=9))
@settings(max_examples=150, deadline=None)
def test_invariant_under_relabeling(case):
    g, perm = case
    assert canonical_form(g) == canonical_form(g.relabeled(perm))


@pytest.mark.property_based
@given(graphs(max_n=7), graphs(max_n=7))
@settings(max_examples=150, deadline=None)
def test_agrees_with_networkx(g, h):
    expected = g.n == h.n and nx.is_isomorphic(g.to_networkx(), h.to_networkx())
    assert are_isomorphic(g, h) == expected
