import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammacone.errors import GraphFormatError
from gammacone.graph import (
    Graph,
    all_labeled_trees,
    classify,
    components,
    connected_component,
    format_graph,
    induced_subgraph,
    named_family,
    nbd,
    nonisomorphic_trees,
    parse_graph,
    prufer_decode,
    random_tree,
    tree_canonical_form,
)


def test_parse_star_centred_at_one():
    g = parse_graph("0 1\n1 2\n1 3")
    assert g.n == 4
    assert g.edges == ((0, 1), (1, 2), (1, 3))
    assert g.degree(1) == 3


def test_parse_single_vertex_header():
    g = parse_graph("vertices 1\n")
    assert (g.n, g.m) == (1, 0)


def test_parse_cycle_and_comments():
    g = parse_graph("# square\r\n0 1\r\n1 2\n\n2 3\n3 0\n")
    assert g.edges == ((0, 1), (0, 3), (1, 2), (2, 3))
    c = classify(g)
    assert c.is_connected and not c.is_acyclic


def test_parse_header_adds_isolated_vertices():
    g = parse_graph("vertices 5\n0 1\n")
    assert g.n == 5
    assert len(components(g)) == 4


@pytest.mark.parametrize(
    "text",
    [
        "",
        "0 1\n1 1\n",
        "0 1\n1 0\n",
        "0\n",
        "0 x\n",
        "vertices 2\n0 2\n",
        "0 1\nvertices 3\n",
        "vertices 0\n",
        "-1 2\n",
    ],
)
def test_parse_rejects(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_format_roundtrip():
    g = named_family("E", 7)
    assert parse_graph(format_graph(g)) == g


def test_graph_validation():
    with pytest.raises(GraphFormatError):
        Graph(3, ((0, 3),))
    with pytest.raises(GraphFormatError):
        Graph(3, ((0, 1), (1, 0)))


def test_named_families():
    assert named_family("path", 4).edges == ((0, 1), (1, 2), (2, 3))
    star = named_family("star", 4)
    assert star.edges == ((0, 1), (0, 2), (0, 3))
    assert named_family("D", 5).edges == ((0, 1), (1, 2), (1, 4), (2, 3))
    assert named_family("E", 6).edges == ((0, 1), (1, 2), (2, 3), (2, 5), (3, 4))
    assert named_family("A", 3) == named_family("path", 3)
    # D4 is the star with three leaves
    assert tree_canonical_form(named_family("D", 4)) == tree_canonical_form(star)
    with pytest.raises(ValueError):
        named_family("D", 3)
    with pytest.raises(ValueError):
        named_family("F", 4)


def test_classify():
    assert classify(named_family("path", 4)).is_tree
    two_edges = Graph(4, ((0, 1), (2, 3)))
    c = classify(two_edges)
    assert (c.is_connected, c.is_acyclic, c.is_forest, c.n_components) == (False, True, True, 2)


def test_connected_component():
    g = named_family("path", 4)
    assert connected_component(g, {1}, 0) == {0}
    assert connected_component(g, set(), 2) == {0, 1, 2, 3}
    with pytest.raises(ValueError):
        connected_component(g, {2}, 2)


def test_component_size_in_a7():
    g = named_family("path", 7)
    # root 3 first, then 1 and 5: the components are 7, 3, 3
    assert len(connected_component(g, {3}, 1)) == 3
    assert len(connected_component(g, {1}, 3)) == 5


def test_nbd():
    star = named_family("star", 4)
    assert nbd(star, 0) == {1, 2, 3}
    assert nbd(named_family("path", 4), 0) == {1}
    assert nbd(Graph(2, ()), 1) == frozenset()


def test_induced_subgraph():
    g = named_family("path", 5)
    sub, old = induced_subgraph(g, {1, 2, 4})
    assert old == [1, 2, 4]
    assert sub.edges == ((0, 1),)


def test_random_tree_small_cases():
    assert random_tree(1, 5).n == 1 and random_tree(1, 5).m == 0
    assert random_tree(2, 9).edges == ((0, 1),)
    g = random_tree(8, 7)
    assert g.m == 7 and classify(g).is_tree


def test_random_tree_is_deterministic():
    assert random_tree(9, 123) == random_tree(9, 123)


@given(st.integers(1, 12), st.integers(0, 2**32))
@settings(max_examples=60, deadline=None)
def test_random_tree_always_tree(n, seed):
    g = random_tree(n, seed)
    assert g.n == n and classify(g).is_tree


def test_prufer_decode_known():
    assert prufer_decode([3, 3, 3], 5).edges == ((0, 3), (1, 3), (2, 3), (3, 4))


@pytest.mark.parametrize("n", range(1, 7))
def test_cayley_count(n):
    trees = list(all_labeled_trees(n))
    assert len(trees) == max(1, n ** (n - 2))
    assert len(set(trees)) == len(trees)


def test_nonisomorphic_tree_counts():
    # unlabeled trees on 1..9 vertices
    assert [len(nonisomorphic_trees(n)) for n in range(1, 10)] == [1, 1, 1, 2, 3, 6, 11, 23, 47]


@pytest.mark.parametrize("n", range(1, 8))
def test_isomorphism_classes_cover_all_labeled_trees(n):
    forms = {tree_canonical_form(g) for g in all_labeled_trees(n)}
    assert forms == {tree_canonical_form(g) for g in nonisomorphic_trees(n)}


def test_canonical_form_ignores_labels():
    a = Graph(4, ((0, 1), (1, 2), (2, 3)))
    b = Graph(4, ((2, 0), (0, 3), (3, 1)))
    assert tree_canonical_form(a) == tree_canonical_form(b)
    assert tree_canonical_form(a) != tree_canonical_form(named_family("star", 4))


def test_labeled_tree_total():
    assert sum(1 for _ in all_labeled_trees(7)) == 7**5 == math.prod([7] * 5)
