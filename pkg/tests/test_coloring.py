from itertools import permutations, product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramseykit.coloring import (Coloring, ColoringError, MalformedColoringFile, UnsupportedSize,
                                canonical_key, class_graph, format_coloring, format_dot,
                                merge_classes, pair_index, parse_coloring)
from ramseykit.construct import blow_up, pentagon_coloring
from ramseykit.graph import complete, components


@st.composite
def colorings(draw, max_p=7, max_r=3):
    p = draw(st.integers(0, max_p))
    r = draw(st.integers(1, max_r))
    data = draw(st.lists(st.integers(0, r - 1), min_size=comb(p, 2), max_size=comb(p, 2)))
    return Coloring(p, r, bytes(data))


def brute_canonical(c):
    best = None
    for perm in permutations(range(c.p)):
        s = c.permute(list(perm)).assignment
        if best is None or s < best:
            best = s
    return bytes((c.p, c.r)) + best


def fig1():
    return blow_up(pentagon_coloring(), Coloring.monochrome(21)).relabel_classes([1, 2, 0])


def test_pair_index_order():
    idx = [pair_index(u, v) for v in range(6) for u in range(v)]
    assert idx == list(range(15))
    assert pair_index(4, 1) == pair_index(1, 4)


def test_class_graph_fig1():
    c = fig1()
    green = class_graph(c, 0)
    assert [len(x) for x in components(green)] == [21] * 5
    assert green.edge_count == 5 * 210
    red = class_graph(c, 1)
    assert red.edge_count == 5 * 21 * 21
    for u, v in red.edges():
        assert (v // 21 - u // 21) % 5 in (1, 4)


def test_class_graph_single_class():
    assert class_graph(Coloring.monochrome(6), 0) == complete(6)
    with pytest.raises(ColoringError):
        class_graph(Coloring.monochrome(3), 1)


def test_merge_fig1_red_blue():
    c = fig1()
    merged, remap = merge_classes(c, {1, 2})
    assert merged.r == 2 and remap == {0: 0, 1: 1, 2: 1}
    g = class_graph(merged, 1)
    green = class_graph(c, 0)
    # complement of the green graph: complete 5-partite with parts of 21
    for u in range(c.p):
        assert g.adjacency[u] == ((1 << c.p) - 1) ^ (1 << u) ^ green.adjacency[u]


def test_merge_single_and_all():
    c = Coloring(4, 3, bytes([0, 1, 2, 2, 1, 0]))
    same, remap = merge_classes(c, {0})
    assert same == c and remap == {0: 0, 1: 1, 2: 2}
    one, _ = merge_classes(c, {0, 1, 2})
    assert one.r == 1 and class_graph(one, 0) == complete(4)
    with pytest.raises(ColoringError):
        merge_classes(c, set())
    with pytest.raises(ColoringError):
        merge_classes(c, {3})


def test_merge_compaction():
    c = Coloring(3, 4, bytes([0, 2, 3]))
    merged, remap = merge_classes(c, {1, 2})
    assert remap == {0: 0, 1: 1, 2: 1, 3: 2}
    assert merged.assignment == bytes([0, 1, 2])


@given(colorings(), st.data())
def test_merge_properties(c, data):
    merge = data.draw(st.sets(st.integers(0, c.r - 1), min_size=1))
    merged, remap = merge_classes(c, merge)
    assert merged.p == c.p and merged.r == c.r - len(merge) + 1
    assert sum(merged.class_sizes()) == comb(c.p, 2)
    new = remap[min(merge)]
    for (u, v, old), (_, _, now) in zip(c.pairs(), merged.pairs()):
        assert (now == new) == (old in merge)
        assert now == remap[old]


@given(colorings())
def test_class_graphs_partition_edges(c):
    assert sum(class_graph(c, i).edge_count for i in range(c.r)) == comb(c.p, 2)


def test_canonical_key_examples():
    a = Coloring(3, 2, bytes([1, 0, 0]))  # red {0,1}
    b = Coloring(3, 2, bytes([0, 0, 1]))  # red {1,2}
    two = Coloring(3, 2, bytes([1, 1, 0]))
    assert canonical_key(a) == canonical_key(b)
    assert canonical_key(a) != canonical_key(two)
    with pytest.raises(UnsupportedSize):
        canonical_key(Coloring.monochrome(13))


@settings(max_examples=60, deadline=None)
@given(colorings(max_p=6))
def test_canonical_key_matches_brute_force(c):
    assert canonical_key(c) == brute_canonical(c)


def test_canonical_key_invariant_all_permutations():
    c = Coloring.from_function(6, 3, lambda u, v: (u * 7 + v * 3 + u * v) % 3)
    key = canonical_key(c)
    for perm in permutations(range(6)):
        assert canonical_key(c.permute(list(perm))) == key


def test_canonical_key_distinguishes_all_small_classes():
    # 2-colorings of K_4 fall into 11 isomorphism classes (graphs on 4 vertices)
    keys = {canonical_key(Coloring(4, 2, bytes(bits))) for bits in product((0, 1), repeat=6)}
    assert len(keys) == 11


def test_canonical_key_symmetric_p12():
    for c in (Coloring.monochrome(12, 2), blow_up(Coloring.monochrome(3), Coloring.monochrome(4))):
        assert canonical_key(c) == canonical_key(c.permute(list(range(11, -1, -1))))


def test_coloring_file_format():
    c = Coloring(4, 3, bytes([0, 1, 2, 2, 1, 0]))
    text = format_coloring(c)
    assert text == "RCOL 1 4 3\n0\n1 2\n2 1 0\n"
    assert parse_coloring(text) == c
    assert parse_coloring("# comment\n" + text) == c
    assert format_coloring(Coloring.monochrome(1)) == "RCOL 1 1 1\n"


@given(colorings())
def test_coloring_file_round_trip(c):
    text = format_coloring(c)
    assert format_coloring(parse_coloring(text)) == text


@pytest.mark.parametrize("text", [
    "",
    "RCOL 2 2 1\n0\n",
    "RCOL 1 3 2\n0\n",
    "RCOL 1 3 2\n0\n0 2\n",
    "RCOL 1 3 2\n0\n0  1\n",
    "RCOL 1 2 2\n# late comment\n0\n",
    "RCOL 1 2 2\n01\n",
    "RCOL 1 2 0\n0\n",
])
def test_malformed_coloring_files(text):
    with pytest.raises(MalformedColoringFile):
        parse_coloring(text)


def test_dot_export():
    single = format_dot(Coloring.monochrome(2))
    assert single == "graph coloring {\n  0;\n  1;\n  0 -- 1 [color=green];\n}\n"
    dot = format_dot(pentagon_coloring())
    assert dot.count("color=green") == 5 and dot.count("color=red") == 5
    assert dot.count("--") == 10
    c = Coloring(4, 4, bytes([3, 0, 1, 2, 0, 0]))
    assert "[color=c3]" in format_dot(c)
