import pytest
from hypothesis import given, strategies as st

from eulermod4.constructions import cycle_graph, hypercube
from eulermod4.errors import DuplicateEdge, LoopEdge, NodeOutOfRange
from eulermod4.graph import (
    build_graph,
    is_bipartite,
    is_connected,
    is_eulerian,
    regular_degree,
    relabel,
    two_coloring,
)

from conftest import bowtie, to_nx
import networkx as nx


@st.composite
def graphs(draw, max_p=9):
    p = draw(st.integers(1, max_p))
    pairs = [(u, v) for u in range(p) for v in range(u + 1, p)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(p, chosen)


def test_triangle():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert (g.p, g.q) == (3, 3)
    assert g.edges == ((0, 1), (0, 2), (1, 2))


def test_k1():
    g = build_graph(1, [])
    assert (g.p, g.q) == (1, 0)
    assert is_connected(g) and is_eulerian(g)


def test_edges_normalized():
    g = build_graph(4, [(3, 0), (2, 1)])
    assert g.edges == ((0, 3), (1, 2))
    assert g.neighbors(0) == (3,)


@pytest.mark.parametrize(
    "p, edges, exc",
    [
        (3, [(0, 1), (0, 1)], DuplicateEdge),
        (3, [(0, 1), (1, 0)], DuplicateEdge),
        (3, [(1, 1)], LoopEdge),
        (3, [(0, 3)], NodeOutOfRange),
        (3, [(-1, 2)], NodeOutOfRange),
    ],
)
def test_build_rejects(p, edges, exc):
    with pytest.raises(exc):
        build_graph(p, edges)


def test_build_rejects_empty_order():
    with pytest.raises(ValueError):
        build_graph(0, [])


def test_connectivity():
    tri = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    two = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert is_connected(tri)
    assert not is_connected(two)
    assert not is_eulerian(two)


def test_eulerian_examples():
    assert is_eulerian(cycle_graph(5))
    k4 = build_graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    assert not is_eulerian(k4)


def test_regular_degree():
    assert regular_degree(cycle_graph(6)) == 2
    assert regular_degree(hypercube(4)) == 4
    assert regular_degree(build_graph(3, [(0, 1), (1, 2)])) is None


def test_bipartite():
    assert is_bipartite(cycle_graph(4))
    assert not is_bipartite(cycle_graph(5))
    assert is_bipartite(hypercube(4))


def test_two_coloring_is_proper():
    col = two_coloring(hypercube(3))
    assert col is not None
    assert all(col[u] != col[v] for u, v in hypercube(3).edges)


def test_edge_ids_and_csr():
    g = bowtie()
    indptr, indices = g.csr
    assert list(indptr) == [0, 4, 6, 8, 10, 12]
    assert sorted(indices[:4]) == [1, 2, 3, 4]
    for k, (u, v) in enumerate(g.edges):
        assert g.edge_id(u, v) == g.edge_id(v, u) == k
        assert g.edge_id_matrix[u, v] == g.edge_id_matrix[v, u] == k
    assert g.edge_id_matrix[1, 3] == -1


def test_relabel_preserves_structure():
    g = bowtie()
    h = relabel(g, [4, 3, 2, 1, 0])
    assert h.q == g.q
    assert sorted(h.degrees) == sorted(g.degrees)
    assert h.degree(4) == 4


@given(graphs())
def test_degree_sum(g):
    assert sum(g.degrees) == 2 * g.q
    for u in range(g.p):
        for v in g.neighbors(u):
            assert u in g.neighbors(v)


@given(graphs())
def test_predicates_match_networkx(g):
    h = to_nx(g)
    assert is_connected(g) == nx.is_connected(h)
    assert is_bipartite(g) == nx.is_bipartite(h)
    assert is_eulerian(g) == (nx.is_connected(h) and nx.is_eulerian(h))


def test_graphs_are_hashable_values():
    a = build_graph(3, [(0, 1), (1, 2)])
    b = build_graph(3, [(2, 1), (1, 0)])
    assert a == b and hash(a) == hash(b)
