import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from barviz.graph import (
    Graph,
    GraphError,
    block_cut_tree,
    complete_graph,
    cut_vertices,
    cycle_graph,
    is_isomorphic,
    lobes,
    path_graph,
)
from helpers import SAMPLE_H, cut_vertices_bf, rng


@st.composite
def small_graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    names = [f"x{i}" for i in range(n)]
    pairs = [(a, b) for i, a in enumerate(names) for b in names[i + 1:]]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return Graph(names, chosen)


def test_graph_basics():
    g = Graph(["z"], [("b", "a"), ("a", "c")])
    assert g.vertices == ["a", "b", "c", "z"]
    assert g.edges == [("a", "b"), ("a", "c")]
    assert g.neighbors("a") == ["b", "c"]
    assert g.has_edge("b", "a") and not g.has_edge("b", "c")
    with pytest.raises(GraphError):
        Graph([], [("a", "a")])
    with pytest.raises(GraphError):
        g.neighbors("nope")


def test_cut_vertices_examples():
    assert cut_vertices(path_graph("aub")) == {"u"}
    assert cut_vertices(cycle_graph("abc")) == set()
    # brute-force removal on the sample edge list gives {d, e}
    assert cut_vertices_bf(SAMPLE_H) == {"d", "e"}
    assert cut_vertices(SAMPLE_H) == {"d", "e"}


def test_lobes_examples():
    parts = lobes(path_graph("aub"), "u")
    assert sorted(p.edges for p in parts) == [[("a", "u")], [("b", "u")]]
    tri = cycle_graph("abc")
    assert lobes(tri, "a") == [tri]
    at_d = lobes(SAMPLE_H, "d")
    assert sorted(p.vertices for p in at_d) == [list("abdefgh"), ["c", "d"]]


def test_lobes_unknown_vertex():
    with pytest.raises(GraphError):
        lobes(SAMPLE_H, "q")


def test_block_cut_tree_examples():
    t = block_cut_tree(path_graph("aub"))
    assert t.blocks == (("a", "u"), ("b", "u"))
    assert t.cut_vertices == {"u"}
    k4 = block_cut_tree(complete_graph("abcd"))
    assert k4.blocks == (tuple("abcd"),) and not k4.cut_vertices
    h = block_cut_tree(SAMPLE_H)
    assert sorted(h.blocks) == [tuple("abdegh"), ("c", "d"), ("e", "f")]
    assert h.cut_vertices == {"d", "e"}


def test_block_cut_tree_isolated_and_rooting():
    g = Graph(["q"], [("a", "b"), ("b", "c")])
    t = block_cut_tree(g)
    assert ("q",) in t.blocks
    root = t.blocks.index(("a", "b"))
    parent = t.rooted(root)
    assert parent[root] is None
    assert parent[t.blocks.index(("b", "c"))] == "b"


def test_isomorphism_examples():
    assert is_isomorphic(path_graph("abc"), path_graph("xzy"))
    assert not is_isomorphic(cycle_graph("abcd"), path_graph("abcd"))
    k5 = complete_graph("abcde")
    assert is_isomorphic(k5.with_edges(remove=[("a", "b")]), k5.with_edges(remove=[("c", "e")]))
    with pytest.raises(GraphError):
        is_isomorphic(complete_graph(11), complete_graph(11))


@settings(max_examples=150, deadline=None)
@given(small_graphs())
def test_cut_vertices_match_removal(g):
    assert set(cut_vertices(g)) == cut_vertices_bf(g)


@settings(max_examples=150, deadline=None)
@given(small_graphs())
def test_block_structure(g):
    t = block_cut_tree(g)
    # every edge in exactly one block
    assert sum(len(es) for es in t.block_edges) == g.m
    assert set().union(*t.block_edges) == g.edge_set
    for v in g.vertices:
        assert (len(t.blocks_of(v)) >= 2) == (v in t.cut_vertices)
    assert nx.is_forest(t.as_networkx())


@settings(max_examples=100, deadline=None)
@given(small_graphs(), st.data())
def test_lobes_partition_edges(g, data):
    v = data.draw(st.sampled_from(g.vertices))
    parts = lobes(g, v)
    seen = [e for p in parts for e in p.edges]
    assert len(seen) == len(set(seen)) and set(seen) == g.edge_set
    for i, p in enumerate(parts):
        for q in parts[i + 1:]:
            assert set(p.vertices) & set(q.vertices) == {v}


def test_random_graphs_cut_vertices_n12():
    r = rng(7)
    for _ in range(100):
        n = r.randint(2, 12)
        names = [str(i) for i in range(n)]
        g = Graph(names, [(a, b) for i, a in enumerate(names) for b in names[i + 1:] if r.random() < 0.25])
        assert set(cut_vertices(g)) == cut_vertices_bf(g)
