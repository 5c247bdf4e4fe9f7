import itertools
import math
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammacone.count import brute_extensions, count_brute, count_ideals_dp
from gammacone.errors import NotATreeError
from gammacone.graph import Graph, named_family, nonisomorphic_trees, parse_graph, random_tree
from gammacone.order import LinearOrder, principal_decomposition, principal_orientation
from gammacone.principal import (
    RootedTree,
    _below_candidates,
    block_decomposition,
    classify_extension,
    gamma_dv,
    hook_length_count,
    is_minimal_rooted_tree,
    lift,
    ordtilde_classes,
    principal_number_dp,
    principal_number_formula,
    principal_number_induction,
    verify_block_characterizations,
)
from gammacone.verification import random_rooted_tree, rooted_orientation

A7 = named_family("path", 7)
ODD = principal_decomposition(A7, side=1)   # pi1 = {1, 3, 5}
EVEN = principal_decomposition(A7, side=0)  # pi1 = {0, 2, 4, 6}


def test_gamma_dv_examples():
    assert gamma_dv(A7, (3, 1, 5), 3) == frozenset(range(7))
    assert len(gamma_dv(A7, (3, 1, 5), 1)) == 3
    assert len(gamma_dv(A7, (1, 3, 5), 3)) == 5
    star = named_family("star", 4)
    assert gamma_dv(star, (0,), 0) == frozenset(range(4))
    with pytest.raises(ValueError):
        gamma_dv(A7, (1, 3, 5), 2)
    with pytest.raises(ValueError):
        gamma_dv(A7, (1, 3), 1, pi1={1, 3, 5})


def test_a7_component_sizes_of_one_class():
    sizes = sorted(len(gamma_dv(A7, (1, 3, 5), v)) for v in (1, 3, 5))
    assert sizes == [3, 5, 7]


def test_class_counts():
    assert len(ordtilde_classes(A7, ODD)) == 5
    assert len(ordtilde_classes(A7, EVEN)) == 14
    star = named_family("star", 4)
    assert len(ordtilde_classes(star, principal_decomposition(star))) == 1


def test_class_engines_agree():
    for n in range(2, 9):
        for g in nonisomorphic_trees(n):
            for side in (0, 1):
                d = principal_decomposition(g, side)
                fac = ordtilde_classes(g, d, engine="factorial")
                rec = ordtilde_classes(g, d, engine="recursive")
                assert [(c.representative, c.hasse, c.components) for c in fac] == [
                    (c.representative, c.hasse, c.components) for c in rec
                ]


def test_class_members_share_components():
    # every ordering of pi1 falls in exactly one class, keyed by its components
    for cls_list, d in ((ordtilde_classes(A7, ODD), ODD), (ordtilde_classes(A7, EVEN), EVEN)):
        keys = {tuple(sorted(c.components.items(), key=lambda kv: kv[0])) for c in cls_list}
        seen = set()
        for perm in itertools.permutations(sorted(d.pi1)):
            key = tuple(sorted(((v, gamma_dv(A7, perm, v)) for v in perm), key=lambda kv: kv[0]))
            assert key in keys
            seen.add(key)
        assert seen == keys


def test_principal_number_examples():
    assert principal_number_formula(A7, ODD) == principal_number_formula(A7, EVEN) == 272
    assert principal_number_induction(A7, ODD) == principal_number_induction(A7, EVEN) == 272
    g4 = named_family("path", 4)
    d4 = principal_decomposition(g4)
    assert principal_number_formula(g4, d4) == principal_number_induction(g4, d4) == 5
    one = Graph(1, ())
    d1 = principal_decomposition(one)
    assert principal_number_formula(one, d1) == principal_number_induction(one, d1) == 1


@pytest.mark.parametrize("n", range(2, 9))
def test_star_principal_number(n):
    g = named_family("star", n)
    d = principal_decomposition(g)
    assert d.pi1 == {0}
    assert principal_number_induction(g, d) == math.factorial(n - 1)
    assert principal_number_formula(g, d.swapped()) == math.factorial(n - 1)


@given(st.integers(1, 12), st.integers(0, 2**32), st.integers(0, 1))
@settings(max_examples=60, deadline=None)
def test_three_methods_agree(n, seed, side):
    g = random_tree(n, seed)
    d = principal_decomposition(g, side)
    dp = principal_number_dp(g, d)
    assert principal_number_formula(g, d) == dp
    assert principal_number_induction(g, d) == dp


def test_auto_engine_switches_to_recursive(monkeypatch):
    import gammacone.principal as principal_module

    monkeypatch.setattr(principal_module, "FACTORIAL_ENGINE_LIMIT", 2)
    assert len(ordtilde_classes(A7, EVEN)) == 14
    assert principal_number_formula(A7, EVEN) == 272


def test_star_leaves_first_gives_chains():
    # with the leaves as pi1 every ordering is its own class
    g = named_family("star", 5)
    d = principal_decomposition(g, side=1)
    classes = ordtilde_classes(g, d)
    assert len(classes) == 24
    assert all(sorted(c.sizes().values()) == [2, 3, 4, 5] for c in classes)


def test_tree_only():
    c4 = parse_graph("0 1\n1 2\n2 3\n3 0")
    with pytest.raises(NotATreeError):
        principal_number_formula(c4, principal_decomposition(c4))
    with pytest.raises(NotATreeError):
        block_decomposition(c4, principal_decomposition(c4))


def test_rooted_tree_validation():
    RootedTree(frozenset({0, 1, 2}), ((1, 0), (2, 1)), 0)
    with pytest.raises(ValueError):
        RootedTree(frozenset({0, 1, 2}), ((1, 0),), 0)
    with pytest.raises(ValueError):
        RootedTree(frozenset({0, 1, 2}), ((1, 2), (2, 1)), 0)
    with pytest.raises(ValueError):
        RootedTree(frozenset({0, 1}), ((0, 1), (1, 0)), 0)


def test_rooted_tree_queries():
    t = RootedTree.from_edges(range(5), [(0, 1), (0, 2), (2, 3), (2, 4)])
    assert t.root == 0
    assert t.ancestors(3) == [2, 0]
    assert t.less(0, 4) and not t.less(1, 3)
    assert t.subtree_sizes() == {0: 5, 1: 1, 2: 3, 3: 1, 4: 1}
    assert t.subtree(2) == {2, 3, 4}
    assert t.lex_min_extension() == (0, 1, 2, 3, 4)
    assert t.restrict({0, 3, 4}).parent_map == {3: 0, 4: 0}


def test_hook_length_examples():
    chain = RootedTree.from_edges(range(3), [(0, 1), (1, 2)])
    assert hook_length_count(chain) == 1
    star = RootedTree.from_edges(range(4), [(0, 1), (0, 2), (0, 3)])
    assert hook_length_count(star) == 6
    # subtree sizes 7, 3, 3 and four leaves
    t2 = RootedTree.from_edges(range(7), [(3, 1), (3, 5), (1, 0), (1, 2), (5, 4), (5, 6)])
    assert hook_length_count(t2) == 80
    t = RootedTree.from_edges(range(7), [(3, 2), (3, 4), (2, 1), (1, 0), (4, 5), (5, 6)])
    assert hook_length_count(t) == count_brute(rooted_orientation(t))


@given(st.integers(1, 9), st.integers(0, 2**32))
@settings(max_examples=80, deadline=None)
def test_hook_length_vs_brute(n, seed):
    t = random_rooted_tree(n, seed)
    assert hook_length_count(t) == count_brute(rooted_orientation(t))


def test_a7_blocks():
    odd = block_decomposition(A7, ODD)
    assert sorted(odd.counts()) == [48, 48, 48, 48, 80] and odd.total == 272
    even = block_decomposition(A7, EVEN)
    assert Counter(even.counts()) == Counter({15: 2, 10: 2, 20: 2, 8: 4, 45: 2, 30: 2})
    assert even.total == 272
    denoms = Counter(b.denominators for b in odd.blocks)
    assert denoms == {(7, 5, 3): 4, (7, 3, 3): 1}


def test_star_block():
    star = named_family("star", 4)
    rep = block_decomposition(star, principal_decomposition(star))
    assert rep.counts() == [6]
    t = rep.blocks[0].lifted
    assert t.root == 0 and t.parent_map == {1: 0, 2: 0, 3: 0}


def test_lift_restricts_to_class():
    for cls in ordtilde_classes(A7, ODD):
        t = lift(cls, ODD, A7)
        assert t.restrict(ODD.pi1) == cls.hasse
        po = principal_orientation(A7, ODD)
        assert all(t.less(a, b) for a, b in po.pairs())


def test_single_vertex_block():
    g = Graph(1, ())
    rep = block_decomposition(g, principal_decomposition(g))
    assert rep.counts() == [1] and rep.total == 1


@pytest.mark.parametrize("dec", [ODD, EVEN], ids=["odd", "even"])
def test_classify_every_extension(dec):
    rep = block_decomposition(A7, dec)
    fibers = Counter(classify_extension(c, rep) for c in brute_extensions(principal_orientation(A7, dec)))
    assert sum(fibers.values()) == 272
    assert [fibers[i] for i in range(len(rep.blocks))] == rep.counts()


def test_classify_rejects_non_extension():
    rep = block_decomposition(A7, ODD)
    with pytest.raises(ValueError):
        classify_extension(LinearOrder(tuple(range(7))), rep)


def test_block_totals_random():
    for seed in range(30):
        g = random_tree(2 + seed % 9, seed)
        for side in (0, 1):
            d = principal_decomposition(g, side)
            rep = block_decomposition(g, d)
            assert rep.total == count_ideals_dp(principal_orientation(g, d))
            assert len({b.lifted for b in rep.blocks}) == len(rep.blocks)


def test_block_characterization_examples():
    for d in (ODD, EVEN):
        assert verify_block_characterizations(A7, d, bijection_limit=7)
    g4 = named_family("path", 4)
    rec = verify_block_characterizations(g4, principal_decomposition(g4))
    assert rec and rec.details["bijection_rhs"] == rec.details["classes"]
    one = Graph(1, ())
    assert verify_block_characterizations(one, principal_decomposition(one))


def test_single_reparent_minimality_matches_exhaustive():
    from gammacone.principal import _cond_lift, _cond_nbd_chain

    for n in range(2, 7):
        for g in nonisomorphic_trees(n):
            for side in (0, 1):
                d = principal_decomposition(g, side)
                pred = _cond_lift(g, d)
                chain = _cond_nbd_chain(g, d)
                for b in block_decomposition(g, d).blocks:
                    assert is_minimal_rooted_tree(b.lifted, pred) == is_minimal_rooted_tree(
                        b.lifted, pred, exhaustive=True
                    )
                    assert is_minimal_rooted_tree(b.cls.hasse, chain, exhaustive=True)


def test_minimality_detects_non_minimal():
    g = named_family("path", 3)
    d = principal_decomposition(g, side=1)  # pi1 = {1}
    from gammacone.principal import _cond_lift

    # a chain through 0 orders the two pi2 vertices, so it fails the lift condition
    chain = RootedTree.from_edges(range(3), [(1, 0), (0, 2)])
    assert not _cond_lift(g, d)(chain)
    star = RootedTree.from_edges(range(3), [(1, 0), (1, 2)])
    assert _cond_lift(g, d)(star) and is_minimal_rooted_tree(star, _cond_lift(g, d))
    # the trivial predicate is satisfied by the flat star under any chain
    chain2 = RootedTree.from_edges(range(3), [(1, 0), (0, 2)])
    assert not is_minimal_rooted_tree(chain2, lambda f: True)
    assert len(list(_below_candidates(chain2))) == 2
