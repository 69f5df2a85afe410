import pytest
from hypothesis import given, strategies as st

from tsallisnet import build_graph, degree, degree_sequence, total_degree
from tsallisnet.errors import EmptyGraphError, GraphError, SelfLoopError, UnknownNodeError

from oracles import handshake_degrees


def test_path_graph():
    g = build_graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert g.number_of_nodes() == 3
    assert g.number_of_edges() == 2
    assert degree_sequence(g) == [1, 2, 1]


def test_reversed_duplicate_collapses():
    dups = []
    g = build_graph(["a", "b"], [("a", "b"), ("b", "a")], duplicates=dups)
    assert g.number_of_edges() == 1
    assert dups == [1]


def test_self_loop_rejected():
    with pytest.raises(SelfLoopError):
        build_graph(["a"], [("a", "a")])


def test_empty_graph_rejected():
    with pytest.raises(EmptyGraphError):
        build_graph([], [])


@pytest.mark.parametrize("label", ["", 3, None])
def test_bad_labels(label):
    with pytest.raises(GraphError):
        build_graph([label], [])


def test_endpoints_auto_added_in_first_occurrence_order():
    g = build_graph(["x"], [("b", "a"), ("c", "x")])
    assert g.nodes == ("x", "b", "a", "c")


def test_degree_queries():
    star = build_graph(["c", "1", "2", "3", "4", "iso"],
                       [("c", "1"), ("c", "2"), ("c", "3"), ("c", "4")])
    assert degree(star, "c") == 4
    assert degree(star, "iso") == 0
    with pytest.raises(UnknownNodeError):
        degree(star, "nope")


def test_example_fixture_degrees(example):
    assert degree(example, "15") == 6
    assert degree_sequence(example) == [3, 3, 3, 2, 5, 3, 5, 3, 1, 4, 2, 3, 2, 2, 6, 2, 3, 4, 4, 3, 3]
    assert total_degree(example) == 66


def test_triangle_and_edgeless():
    tri = build_graph("abc", [("a", "b"), ("b", "c"), ("c", "a")])
    assert degree_sequence(tri) == [2, 2, 2]
    assert total_degree(tri) == 6
    empty = build_graph(["a", "b", "c"], [])
    assert degree_sequence(empty) == [0, 0, 0]
    assert total_degree(empty) == 0


def test_immutable():
    g = build_graph(["a", "b"], [("a", "b")])
    with pytest.raises(AttributeError):
        g._degrees = (5, 5)


edge_lists = st.integers(2, 12).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]),
                 max_size=40),
    )
)


@given(edge_lists)
def test_handshake_and_dedup(case):
    n, pairs = case
    g = build_graph([str(i) for i in range(n)], [(str(u), str(v)) for u, v in pairs])
    unique = {frozenset(e) for e in pairs}
    assert g.number_of_edges() == len(unique)
    assert total_degree(g) == 2 * g.number_of_edges()
    assert degree_sequence(g) == handshake_degrees(n, [tuple(e) for e in unique])


@given(edge_lists, st.randoms(use_true_random=False))
def test_relabeling_permutes_degrees(case, rnd):
    n, pairs = case
    names = [f"v{i}" for i in range(n)]
    perm = names[:]
    rnd.shuffle(perm)
    g = build_graph(names, [(names[u], names[v]) for u, v in pairs])
    h = build_graph(perm, [(names[u], names[v]) for u, v in pairs])
    assert sorted(degree_sequence(g)) == sorted(degree_sequence(h))
    assert [degree(h, x) for x in names] == degree_sequence(g)


@given(edge_lists)
def test_rebuild_is_idempotent(case):
    n, pairs = case
    g = build_graph([str(i) for i in range(n)], [(str(u), str(v)) for u, v in pairs])
    assert build_graph(g.nodes, g.edges) == g
