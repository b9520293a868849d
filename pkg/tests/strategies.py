"""Stratégies hypothesis partagées"""

from itertools import combinations

from hypothesis import strategies as st

from src.graphs.graph import Graph


@st.composite
def graphs(draw, min_n: int = 2, max_n: int = 7, min_edges: int = 0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=min_edges, max_size=len(pairs)))
    return Graph(n, tuple(edges))


@st.composite
def graphs_with_permutation(draw, max_n: int = 8):
    g = draw(graphs(max_n=max_n))
    perm = draw(st.permutations(list(range(g.n))))
    return g, tuple(perm)
