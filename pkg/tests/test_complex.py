import networkx as nx
import pytest
from hypothesis import given, settings

from src.errors import GraphInputError
from src.graphs.graph import Graph, complete_graph, cycle_graph, enumerate_matchings, path_graph, star_graph
from src.topology.complex import (
    SimplicialComplex,
    dimension,
    f_vector,
    is_pure,
    link,
    matching_complex,
    one_skeleton_graph,
    one_skeleton_is_connected_graph_with_edge,
)
from tests.strategies import graphs


@pytest.fixture
def m_c7(c7):
    return matching_complex(c7)


class TestMatchingComplex:
    def test_c7(self, m_c7):
        assert f_vector(m_c7) == [7, 14, 7]
        assert dimension(m_c7) == 2
        assert is_pure(m_c7)

    def test_c4_is_two_disjoint_edges(self, c4):
        m = matching_complex(c4)
        assert m.facets == ((0, 3), (1, 2))
        assert m.to_facet_lines() == ["0-1,2-3", "0-3,1-2"]

    def test_k4_is_three_disjoint_edges(self, k4):
        m = matching_complex(k4)
        assert len(m.facets) == 3
        assert all(len(f) == 2 for f in m.facets)
        assert nx.number_connected_components(one_skeleton_graph(m)) == 3

    def test_star(self):
        m = matching_complex(star_graph(4))
        assert m.dimension == 0
        assert len(m.vertices) == 4

    def test_p4_not_pure(self):
        m = matching_complex(path_graph(4))
        assert not is_pure(m)
        assert set(m.facets) == {(1,), (0, 2)}

    def test_empty_graph_rejected(self):
        with pytest.raises(GraphInputError):
            matching_complex(Graph(3, ()))

    def test_to_dict(self, m_c7):
        data = m_c7.to_dict()
        assert data["dimension"] == 2
        assert data["f_vector"] == [7, 14, 7]
        assert data["vertices"][0] == "0-1"

    @pytest.mark.property_based
    @given(graphs(max_n=7, min_edges=1))
    @settings(max_examples=80, deadline=None)
    def test_faces_are_the_matchings(self, g):
        m = matching_complex(g)
        assert len(m.faces) == len(enumerate_matchings(g, g.n // 2))


class TestLinks:
    def test_vertex_links_of_m_c7_are_paths(self, m_c7):
        for v in m_c7.vertices:
            skeleton = one_skeleton_graph(link(m_c7, (v,)))
            assert skeleton.number_of_nodes() == 4
            assert nx.is_tree(skeleton)
            assert max(d for _, d in skeleton.degree) == 2

    def test_edge_links_of_m_c7(self, m_c7):
        sizes = sorted(len(link(m_c7, edge).facets) for edge in m_c7.faces_of_dim(1))
        # bande de Möbius: 7 arêtes intérieures, 7 arêtes de bord
        assert sizes == [1] * 7 + [2] * 7
        interior = [e for e in m_c7.faces_of_dim(1) if len(link(m_c7, e).facets) == 2]
        assert all(link(m_c7, e).dimension == 0 for e in interior)

    def test_empty_face(self, m_c7):
        assert link(m_c7, ()) == m_c7

    def test_missing_face(self, m_c7):
        with pytest.raises(GraphInputError):
            link(m_c7, (0, 1))


class TestPredicates:
    def test_single_vertex_complex(self):
        c = SimplicialComplex(((0,),))
        assert is_pure(c)
        assert c.dimension == 0
        assert f_vector(c) == [1]

    def test_connected_graph_with_edge(self, c4, k4):
        assert one_skeleton_is_connected_graph_with_edge(matching_complex(cycle_graph(5)))
        assert not one_skeleton_is_connected_graph_with_edge(matching_complex(c4))
        assert not one_skeleton_is_connected_graph_with_edge(matching_complex(k4))
        assert not one_skeleton_is_connected_graph_with_edge(matching_complex(complete_graph(3)))
