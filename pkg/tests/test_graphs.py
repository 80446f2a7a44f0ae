import random

import pytest
from hypothesis import given, settings, strategies as st

from nilcomplete.errors import GraftPrecondition, InvalidGraph, InvalidPosition
from nilcomplete.graphs import (GlnGraph, canonical_nr_graph, graft, graph_of_matrix, heights,
                                is_downward, is_downward_path, is_properly_downward,
                                is_typewriter_ordered, matrix_of_graph, to_dot, to_tikz)
from nilcomplete.matrices import IntMatrix, make_nr
from nilcomplete.partitions import Partition, nr_type

from support import graft_lemma_violations, random_graft_input

FIG2_ARROWS = {(1, 4), (4, 7), (7, 10), (2, 5), (5, 8), (3, 6), (6, 9)}


def arrow_set(g):
    return {(g.ord(u), g.ord(v)) for u, v, _ in g.arrows()}


def test_figure2_canonical_graph():
    g = canonical_nr_graph(10, 3)
    assert [g.height(i) for i in g.domain()] == [3, 3, 4]
    assert g.position(1) == (3, 4)
    assert [g.position(v) for v in (2, 3, 4)] == [(1, 3), (2, 3), (3, 3)]
    assert arrow_set(g) == FIG2_ARROWS
    assert matrix_of_graph(g) == make_nr(10, 3)
    assert heights(g) == Partition([4, 3, 3])


def test_canonical_graph_n3_r2():
    g = canonical_nr_graph(3, 2)
    assert [g.height(i) for i in g.domain()] == [1, 2]
    assert g.position(1) == (2, 2)
    assert {g.position(2), g.position(3)} == {(1, 1), (2, 1)}


def test_canonical_graph_structure():
    for n in range(2, 21):
        for r in range(1, n):
            g = canonical_nr_graph(n, r)
            assert heights(g) == nr_type(n, r)
            assert matrix_of_graph(g) == make_nr(n, r)
            assert is_properly_downward(g)
            assert all(is_downward_path(g, i) for i in g.domain())
            assert is_typewriter_ordered(g)
            hs = [g.height(i) for i in g.domain()]
            assert hs == sorted(hs)


def test_graph_of_matrix_figure2():
    embed = canonical_nr_graph(10, 3)
    g = graph_of_matrix(make_nr(10, 3), {v: embed.position(v) for v in embed.vertices})
    assert arrow_set(g) == FIG2_ARROWS
    assert g == embed


def test_zero_matrix_has_no_arrows():
    embed = {v: (v, 1) for v in range(1, 5)}
    g = graph_of_matrix(IntMatrix.zeros(4), embed)
    assert g.arrow_count == 0
    assert matrix_of_graph(g) == IntMatrix.zeros(4)


@settings(max_examples=80)
@given(st.integers(1, 8).flatmap(
    lambda n: st.tuples(st.just(n),
                        st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n),
                                 min_size=n, max_size=n),
                        st.permutations(range(1, n + 1)))))
def test_matrix_graph_round_trip(data):
    n, rows, perm = data
    a = IntMatrix.from_rows(rows)
    embed = {v: (p, 1) for v, p in zip(range(1, n + 1), perm)}
    ordinal = {v: o for v, o in zip(range(1, n + 1), perm)}
    assert matrix_of_graph(graph_of_matrix(a, embed, ordinal)) == a


def test_single_vertex():
    g = GlnGraph({"a": 1}, {"a": (1, 1)})
    assert heights(g) == Partition([1])
    assert is_properly_downward(g)


def test_constructor_validation():
    with pytest.raises(InvalidGraph):
        GlnGraph({"a": 1, "b": 1}, {"a": (1, 1), "b": (1, 2)})
    with pytest.raises(InvalidGraph):
        GlnGraph({"a": 1, "b": 2}, {"a": (1, 1), "b": (1, 1)})
    with pytest.raises(InvalidGraph):
        GlnGraph({"a": 1}, {"a": (0, 1)})
    with pytest.raises(InvalidGraph):
        GlnGraph({"a": 1, "b": 2}, {"a": (1, 2), "b": (1, 1)}, [("a", "b", 0)])
    with pytest.raises(InvalidGraph):
        GlnGraph({"a": 1, "b": 2}, {"a": (1, 2), "b": (1, 1)}, [("a", "b", 1), ("a", "b", 1)])


def test_upward_arrow_is_not_downward():
    g = GlnGraph({"a": 1, "b": 2}, {"a": (1, 1), "b": (1, 2)}, [("a", "b", 1)])
    assert not is_downward(g)
    assert not is_properly_downward(g)


def test_missing_arrow_to_vertex_below_is_not_properly_downward():
    g = GlnGraph({"a": 1, "b": 2}, {"a": (1, 2), "b": (1, 1)})
    assert is_downward(g)
    assert not is_properly_downward(g)
    assert is_downward_path(g, 1) is False


def test_down_left_step_is_not_properly_downward():
    ordinal = {"a": 1, "b": 2, "c": 3}
    embed = {"a": (2, 2), "b": (1, 1), "c": (2, 1)}
    g = GlnGraph(ordinal, embed, [("a", "c", 1), ("a", "b", 1)])
    assert is_downward(g)
    assert not is_properly_downward(g)


def test_position_queries():
    g = canonical_nr_graph(10, 3)
    with pytest.raises(InvalidPosition):
        g.height(4)
    with pytest.raises(InvalidPosition):
        is_downward_path(g, 7)
    with pytest.raises(InvalidPosition):
        g.ord_at(1, 4)


@given(st.integers(2, 14).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 1))),
       st.randoms(use_true_random=False))
def test_typewriter_order_survives_removal(nr, rnd):
    g = canonical_nr_graph(*nr)
    keep = [v for v in g.vertices if rnd.random() < 0.5]
    assert is_typewriter_ordered(g, keep)


def test_figure3_graft():
    g = canonical_nr_graph(10, 3)
    before = g.copy()
    g2 = graft(g, 2, 3, 2)
    assert g == before
    assert arrow_set(g2) == FIG2_ARROWS | {(4, 3)}
    assert matrix_of_graph(g2) == make_nr(10, 3) + IntMatrix.elementary(10, 3, 4)
    assert heights(g2) == Partition([5, 3, 2])
    assert g2.position(4) == (2, 4)
    assert g2.position(1) == (2, 5)


def test_graft_onto_first_column():
    g2 = graft(canonical_nr_graph(10, 3), 1, 2, 2)
    assert (6, 2) in arrow_set(g2)
    assert matrix_of_graph(g2) == make_nr(10, 3) + IntMatrix.elementary(10, 2, 6)


def test_full_column_graft_removes_stock():
    g = canonical_nr_graph(10, 3)
    g2 = graft(g, 1, 2, g.height(2))
    assert g2.domain() == [1, 3]


@pytest.mark.parametrize("t, s, m, clause", [
    (4, 3, 1, "t-not-in-domain"),
    (1, 5, 1, "s-not-in-domain"),
    (3, 2, 1, "t-not-less-than-s"),
    (2, 2, 1, "t-not-less-than-s"),
    (1, 2, 0, "m-out-of-range"),
    (1, 2, 4, "m-out-of-range"),
])
def test_graft_precondition_clauses(t, s, m, clause):
    with pytest.raises(GraftPrecondition) as info:
        graft(canonical_nr_graph(10, 3), t, s, m)
    assert info.value.clause == clause


def test_graft_requires_downward_path_and_properly_downward():
    g = graft(canonical_nr_graph(10, 3), 2, 3, 2)
    # column 2 now carries the graft arrow 4 -> 3, so it is not a downward path
    with pytest.raises(GraftPrecondition) as info:
        graft(g, 1, 2, 1)
    assert info.value.clause == "not-downward-path"
    bad = GlnGraph({"a": 1, "b": 2, "c": 3}, {"a": (1, 2), "b": (1, 1), "c": (2, 1)})
    with pytest.raises(GraftPrecondition) as info:
        graft(bad, 1, 2, 1)
    assert info.value.clause == "not-properly-downward"


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**32))
def test_graft_lemma(seed):
    g1, t, s, m = random_graft_input(random.Random(seed))
    g2 = graft(g1, t, s, m)
    assert graft_lemma_violations(g1, g2, t, s, m) == []
    assert len(g2.vertices) == len(g1.vertices)


def test_graft_lemma_part6_is_exercised():
    rng = random.Random(3)
    hits = 0
    for _ in range(300):
        g1, t, s, m = random_graft_input(rng)
        if g1.ord_at(t, g1.height(t)) < g1.ord_at(s, g1.height(s) - m + 1):
            hits += 1
    assert hits > 30


def test_dot_export():
    text = to_dot(canonical_nr_graph(10, 3))
    assert text.count("->") == 7
    assert text.startswith("digraph")
    assert '1 [label="1", pos="3,3!"]' in text


def test_tikz_export_matches_figure2_layout():
    text = to_tikz(canonical_nr_graph(10, 3))
    expected_nodes = {8: (1, 0), 5: (1, 1), 2: (1, 2), 9: (2, 0), 6: (2, 1), 3: (2, 2),
                      10: (3, 0), 7: (3, 1), 4: (3, 2), 1: (3, 3)}
    for o, (x, y) in expected_nodes.items():
        assert f"\\node ({o}) at ({x},{y}) [place]" in text
    for u, v in FIG2_ARROWS:
        assert f"\\draw [thick,->] ({u}) -- ({v});" in text
