import numpy as np
import pytest
from hypothesis import given, settings

from src.graphs.graph import complete_bipartite, complete_graph, cycle_graph, path_graph
from src.topology.complex import SimplicialComplex, euler_characteristic, matching_complex
from src.topology.homology import (
    boundary_matrix,
    check_boundary_squared_zero,
    euler_check,
    exact_rank,
    gf2_rank,
    homology_summary,
    is_buchsbaum_homological,
    is_cm_homological,
    reduced_betti_numbers,
    reduced_betti_with_empty,
)
from tests.strategies import graphs


def test_ranks():
    assert exact_rank(np.array([[2, 4], [1, 2]], dtype=object)) == 1
    assert exact_rank(np.array([[2, 0], [0, 3]], dtype=object)) == 2
    assert gf2_rank(np.array([[2, 0], [0, 3]], dtype=object)) == 1
    assert exact_rank(np.zeros((0, 3), dtype=object)) == 0


def test_betti_c7(c7):
    m = matching_complex(c7)
    assert reduced_betti_numbers(m) == [0, 1, 0]
    assert euler_characteristic(m) == 0
    assert homology_summary(m) == {"betti": [0, 1, 0], "euler": 0}


def test_betti_c4(c4):
    assert reduced_betti_numbers(matching_complex(c4)) == [1, 0]


def test_betti_circle():
    circle = SimplicialComplex(((0, 1), (1, 2), (0, 2)))
    assert reduced_betti_numbers(circle) == [0, 1]


def test_empty_complex():
    assert reduced_betti_with_empty(SimplicialComplex(())) == {-1: 1}


def test_boundary_of_m_c7(c7):
    m = matching_complex(c7)
    assert boundary_matrix(m, 2).matrix.shape == (14, 7)
    assert check_boundary_squared_zero(m)
    assert euler_check(m)


class TestCohenMacaulay:
    def test_k23(self):
        assert is_cm_homological(matching_complex(complete_bipartite(2, 3)))

    def test_c4(self, c4):
        assert not is_cm_homological(matching_complex(c4))

    def test_single_edge(self):
        assert is_cm_homological(SimplicialComplex(((0, 1),)))


class TestBuchsbaum:
    def test_c7(self, c7):
        assert is_buchsbaum_homological(matching_complex(c7))

    def test_k4(self):
        assert is_buchsbaum_homological(matching_complex(complete_graph(4)))

    def test_p4(self):
        assert not is_buchsbaum_homological(matching_complex(path_graph(4)))

    def test_c7_not_cm(self):
        assert not is_cm_homological(matching_complex(cycle_graph(7)))


@pytest.mark.property_based
@given(graphs(max_n=7, min_edges=1))
@settings(max_examples=60, deadline=None)
def test_euler_and_boundary_on_random_graphs(g):
    m = matching_complex(g)
    assert check_boundary_squared_zero(m)
    assert euler_check(m)
