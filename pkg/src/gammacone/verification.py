"""Self-contained invariant sweep used by ``gammacone verify``."""
from __future__ import annotations

import math
import random

from .count import (
    count_brute,
    count_ideals_dp,
    count_refined,
    gamma_vector,
    monotonicity_check,
    refined_by_decomposition,
    wedge,
)
from .graph import Graph, named_family, nonisomorphic_trees, parse_graph, random_tree
from .order import (
    Orientation,
    Verification,
    enumerate_acyclic_orientations,
    principal_decomposition,
    principal_orientation,
    reverse,
)
from .principal import (
    RootedTree,
    block_decomposition,
    hook_length_count,
    principal_number_formula,
    principal_number_induction,
    verify_block_characterizations,
)
from .series import check_a_series

CYCLE4 = "0 1\n1 2\n2 3\n3 0\n"


def _record(name, fails, **details):
    return Verification(name, not fails, details, tuple(fails))


def random_rooted_tree(n: int, seed: int) -> RootedTree:
    g = random_tree(n, seed)
    root = random.Random(seed ^ 0x5EED).randrange(n)
    par = {}
    stack = [root]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w != root and w not in par:
                par[w] = v
                stack.append(w)
    return RootedTree(frozenset(range(n)), tuple(par.items()), root)


def random_wedge(rng: random.Random, max_parts: int = 3, max_total: int = 9, max_part: int = 5):
    """Random summands ``(orientation, alpha)`` whose wedge has at most ``max_total`` vertices."""
    while True:
        k = rng.randint(1, max_parts)
        sizes = [rng.randint(1, max_part) for _ in range(k)]
        if sum(sizes) - k + 1 <= max_total:
            break
    parts = []
    for size in sizes:
        g = random_tree(size, rng.randrange(1 << 32))
        parts.append((Orientation(g, rng.randrange(1 << g.m)), rng.randrange(size)))
    return parts


def rooted_orientation(t: RootedTree) -> Orientation:
    g = Graph(len(t.vertices), tuple(t.edges()))
    bits = 0
    for i, (u, v) in enumerate(g.edges):
        if dict(t.parent).get(u) == v:  # edge points v -> u
            bits |= 1 << i
    return Orientation(g, bits)


def check_reference_values() -> Verification:
    fails = []
    for fam, n, want in (("path", 4, "2(5,3,3,1)"), ("star", 4, "2(6,2,2,2)")):
        got = gamma_vector(named_family(fam, n)).notation()
        if got != want:
            fails.append(f"{fam}({n}) gamma vector {got} != {want}")
    c4 = parse_graph(CYCLE4)
    gv = gamma_vector(c4)
    if gv.notation() != "2(4,2,2,1,1,1,1)":
        fails.append(f"4-cycle gamma vector {gv.notation()}")
    g = named_family("path", 7)
    for side in (0, 1):
        d = principal_decomposition(g, side)
        vals = (principal_number_formula(g, d), principal_number_induction(g, d), count_ideals_dp(principal_orientation(g, d)))
        if vals != (272, 272, 272):
            fails.append(f"A7 side {side}: {vals}")
        counts = sorted(block_decomposition(g, d).counts())
        want = sorted([48, 48, 48, 48, 80] if len(d.pi1) == 3 else [15, 10, 20, 8, 8, 45, 30] * 2)
        if counts != want:
            fails.append(f"A7 side {side}: block counts {counts}")
    return _record("reference_values", fails)


def check_trees(max_n: int) -> list[Verification]:
    """Engine agreement, reversal symmetry, chamber partition, argmax, formula agreement."""
    engine, sym, part, argmax, formula, mono = [], [], [], [], [], []
    for n in range(1, max_n + 1):
        for g in nonisomorphic_trees(n):
            gv = gamma_vector(g)
            if gv.total() != math.factorial(n):
                part.append(f"tree {g.edges}: total {gv.total()}")
            dec = principal_decomposition(g)
            p1 = principal_orientation(g, dec)
            want = {p1.bits, reverse(p1).bits}
            if set(gv.argmax) != want:
                argmax.append(f"tree {g.edges}: argmax {gv.argmax}")
            for side in (0, 1):
                d = dec if side == 0 else dec.swapped()
                vals = {principal_number_formula(g, d), principal_number_induction(g, d), gv.maximum}
                if len(vals) != 1:
                    formula.append(f"tree {g.edges} side {side}: {vals}")
            for bits, s in gv.sigma.items():
                o = Orientation(g, bits)
                if n <= 8 and count_brute(o) != s:
                    engine.append(f"tree {g.edges} o={bits}")
                if gv.sigma[reverse(o).bits] != s:
                    sym.append(f"tree {g.edges} o={bits}")
                if n <= 7:
                    for v in range(n):
                        if o.is_maximal(v) or o.is_minimal(v):
                            rec = monotonicity_check(o, v)
                            if not rec:
                                mono.append(f"tree {g.edges} o={bits} v={v}: {rec.failures}")
    return [
        _record("engine_agreement", engine, max_n=min(max_n, 8)),
        _record("reversal_symmetry", sym),
        _record("chamber_partition_trees", part),
        _record("principal_argmax", argmax),
        _record("principal_formulas_agree", formula),
        _record("monotonicity", mono, max_n=min(max_n, 7)),
    ]


def check_random(seed: int, count: int = 20, max_n: int = 9) -> list[Verification]:
    rng = random.Random(seed)
    hook, refined, wedge_fails = [], [], []
    for _ in range(count):
        n = rng.randint(1, max_n)
        t = random_rooted_tree(n, rng.randrange(1 << 30))
        o = rooted_orientation(t)
        if hook_length_count(t) != count_brute(o):
            hook.append(f"rooted tree {t.parent}")
        for v in range(n):
            vec = count_refined(o, v)
            if sum(vec) != count_ideals_dp(o):
                refined.append(f"rooted tree {t.parent} v={v}")
        parts = random_wedge(rng, max_total=max_n)
        glued, alpha, _ = wedge(parts)
        if refined_by_decomposition(parts) != count_refined(glued, alpha, engine="brute"):
            wedge_fails.append(f"wedge sizes {[p[0].n for p in parts]}")
    return [
        _record("hook_length_vs_brute", hook, seed=seed),
        _record("refined_sum", refined, seed=seed),
        _record("wedge_decomposition", wedge_fails, seed=seed),
    ]


def check_block_theory(max_n: int) -> Verification:
    fails = []
    for n in range(1, max_n + 1):
        for g in nonisomorphic_trees(n):
            for side in (0, 1):
                d = principal_decomposition(g, side)
                rec = verify_block_characterizations(g, d, bijection_limit=min(6, max_n))
                if not rec:
                    fails.extend(f"tree {g.edges} side {side}: {f}" for f in rec.failures)
    return _record("block_decomposition_theory", fails, max_n=max_n)


def check_cycle() -> Verification:
    c4 = parse_graph(CYCLE4)
    orients = list(enumerate_acyclic_orientations(c4))
    total = sum(count_ideals_dp(o) for o in orients)
    fails = [] if (len(orients), total) == (14, 24) else [f"4-cycle: {len(orients)} orientations, total {total}"]
    return _record("chamber_partition_cycle", fails)


def check_series() -> Verification:
    ok, rows = check_a_series(9)
    return _record("a_series", [] if ok else [f"n={r.n}: {r.direct} vs {r.series}" for r in rows if not r.match])


def invariant_suite(seed: int = 0, max_n: int = 7) -> list[Verification]:
    """Run every invariant on built-in and randomized instances."""
    out = [check_reference_values(), check_cycle(), check_series()]
    out.extend(check_trees(max_n))
    out.extend(check_random(seed, max_n=min(9, max_n + 2)))
    out.append(check_block_theory(min(max_n, 7)))
    return out


def principal_argmax_experiment(g: Graph) -> Verification:
    """Does the argmax of the chamber counts equal the principal pair on ``g``?

    Proven for trees only; on other connected bipartite graphs this is an
    experiment and the outcome is reported, not enforced.
    """
    gv = gamma_vector(g)
    d = principal_decomposition(g)
    po = principal_orientation(g, d)
    want = sorted({po.bits, reverse(po).bits})
    got = sorted(gv.argmax)
    fails = [] if got == want else [f"argmax {got} vs principal pair {want}"]
    return _record("principal_argmax_experiment", fails, maximum=gv.maximum, principal=count_ideals_dp(po))
