import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ramseykit.graph import (MAX_VERTICES, Graph, GraphError, complete, components, cycle,
                             empty, format_graph, is_connected, parse_graph, path)


@st.composite
def graphs(draw, max_p=12):
    p = draw(st.integers(0, max_p))
    all_pairs = [(u, v) for v in range(p) for u in range(v)]
    chosen = draw(st.lists(st.sampled_from(all_pairs), unique=True)) if all_pairs else []
    return Graph.from_edges(p, chosen)


def check_invariants(g):
    for v in range(g.p):
        assert not g.has_edge(v, v)
        for u in g.neighbors(v):
            assert g.has_edge(u, v)
    assert g.edge_count * 2 == sum(g.degree(v) for v in range(g.p))


def test_complete():
    assert complete(3).edges() == [(0, 1), (0, 2), (1, 2)]
    assert complete(21).edge_count == 210
    assert complete(0).edge_count == 0 and complete(0).p == 0


def test_cycle():
    assert set(cycle(3).edges()) == set(complete(3).edges())
    c22 = cycle(22)
    assert (c22.p, c22.edge_count) == (22, 22)
    assert all(cycle(5).degree(v) == 2 for v in range(5))
    with pytest.raises(GraphError):
        cycle(2)


def test_path():
    assert (path(1).p, path(1).edge_count) == (1, 0)
    assert (path(3).p, path(3).edge_count) == (3, 2)
    assert path(2).edges() == [(0, 1)]
    with pytest.raises(GraphError):
        path(0)


@pytest.mark.parametrize("g", [complete(5), cycle(7), path(4), empty(3), complete(0)])
def test_generator_invariants(g):
    check_invariants(g)


def test_components():
    blocks = complete(21)
    five = blocks
    for _ in range(4):
        five = five.disjoint_union(blocks)
    comps = components(five)
    assert [len(c) for c in comps] == [21] * 5
    assert comps[1][0] == 21
    assert components(complete(6)) == [list(range(6))]
    assert components(empty(4)) == [[0], [1], [2], [3]]


def test_is_connected():
    assert is_connected(cycle(5))
    assert not is_connected(complete(3).disjoint_union(complete(3)))
    assert is_connected(path(7))
    assert is_connected(complete(0)) and is_connected(complete(1))


def test_rejects_bad_adjacency():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        Graph(1, (1,))
    with pytest.raises(GraphError):
        Graph.from_edges(MAX_VERTICES + 1, [])


@given(graphs())
def test_components_partition(g):
    comps = components(g)
    flat = [v for c in comps for v in c]
    assert sorted(flat) == list(range(g.p))
    assert [c[0] for c in comps] == sorted(c[0] for c in comps)
    check_invariants(g)


@given(graphs(), st.randoms(use_true_random=False))
def test_component_sizes_permutation_invariant(g, rnd):
    perm = list(range(g.p))
    rnd.shuffle(perm)
    sizes = sorted(len(c) for c in components(g))
    assert sorted(len(c) for c in components(g.relabel(perm))) == sizes


@given(graphs())
def test_file_round_trip(g):
    text = format_graph(g)
    assert parse_graph(text) == g
    assert format_graph(parse_graph(text)) == text


def test_file_comments_and_errors():
    g = parse_graph("# a triangle\n3\n0 1\n# mid comment\n0 2\n1 2\n")
    assert g == complete(3)
    with pytest.raises(GraphError, match="duplicate"):
        parse_graph("3\n0 1\n0 1\n")
    with pytest.raises(GraphError):
        parse_graph("3\n1 0\n")
    with pytest.raises(GraphError):
        parse_graph("3\n0 3\n")
    with pytest.raises(GraphError):
        parse_graph("# nothing\n")


def test_large_graph_near_limit():
    rng = random.Random(7)
    edges = {(rng.randrange(1000), rng.randrange(1000)) for _ in range(500)}
    edges = {(min(e), max(e)) for e in edges if e[0] != e[1]}
    g = Graph.from_edges(1000, edges)
    assert g.edge_count == len(edges)
