"""Exact chamber counts: number of linear extensions of an orientation.

Three engines must agree:

* ``count_brute``  enumerates every permutation (numpy rank table),
* ``count_ideals_dp``  sweeps the down-set lattice level by level,
* ``count_by_decomposition``  glues refined counts of wedge summands.

All arithmetic on counts is on Python ints.  numpy is only used to test
permutations against edge constraints; the tallies are exact.
"""
from __future__ import annotations

import itertools
import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import GraphFormatError, guard
from .graph import ENUMERATION_LIMIT, Graph, bits_of
from .order import (
    Orientation,
    Verification,
    enumerate_acyclic_orientations,
    to_poset,
)

__all__ = [
    "BRUTE_LIMIT",
    "DP_LIMIT",
    "REFINED_DP_LIMIT",
    "count_brute",
    "count_ideals_dp",
    "count_poset_dp",
    "count_refined",
    "multinomial",
    "refined_by_decomposition",
    "count_by_decomposition",
    "wedge",
    "split_at",
    "monotonicity_check",
    "GammaVector",
    "gamma_vector",
    "resolve_workers",
]

BRUTE_LIMIT = 10
DP_LIMIT = ENUMERATION_LIMIT
REFINED_DP_LIMIT = 20
#: Below this many orientations a process pool costs more than it saves.
PARALLEL_MIN_ORIENTATIONS = 4096


@lru_cache(maxsize=None)
def _rank_table(n: int) -> np.ndarray:
    """``R[k, v]`` = position of vertex ``v`` in the k-th permutation."""
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int8).reshape(-1, n)
    ranks = np.empty_like(perms)
    rows = np.arange(perms.shape[0])[:, None]
    ranks[rows, perms] = np.arange(n, dtype=np.int8)
    ranks.setflags(write=False)
    return ranks


def _extension_mask(o: Orientation) -> np.ndarray:
    guard(o.n, BRUTE_LIMIT, "brute-force permutation count")
    o.require_acyclic()
    ranks = _rank_table(o.n)
    ok = np.ones(ranks.shape[0], dtype=bool)
    for a, b in o.pairs():
        ok &= ranks[:, a] < ranks[:, b]
    return ok


def count_brute(o: Orientation) -> int:
    """Reference oracle: test all ``l!`` orderings."""
    return int(_extension_mask(o).sum())


def brute_extensions(o: Orientation) -> list[tuple[int, ...]]:
    """All linear extensions as vertex sequences (lowest rank first)."""
    ok = _extension_mask(o)
    ranks = _rank_table(o.n)[ok]
    return [tuple(int(v) for v in np.argsort(r)) for r in ranks]


def _ideal_sweep(n: int, down: tuple[int, ...]) -> list[dict[int, int]]:
    """Level ``k`` maps each down-set of size ``k`` to its number of orderings."""
    levels = [{0: 1}]
    for _ in range(n):
        nxt: dict[int, int] = {}
        for ideal, ways in levels[-1].items():
            free = ((1 << n) - 1) & ~ideal
            for v in bits_of(free):
                if down[v] & ~ideal == 0:
                    key = ideal | (1 << v)
                    nxt[key] = nxt.get(key, 0) + ways
        levels.append(nxt)
    return levels


def count_poset_dp(n: int, down: tuple[int, ...]) -> int:
    guard(n, DP_LIMIT, "order-ideal DP")
    return _ideal_sweep(n, down)[n].get((1 << n) - 1, 0)


def count_ideals_dp(o: Orientation) -> int:
    """Linear extensions via memoised counts over down-sets."""
    guard(o.n, DP_LIMIT, "order-ideal DP")
    p = to_poset(o)
    return count_poset_dp(p.n, p.down)


def count_refined(o: Orientation, alpha: int, engine: str = "dp") -> list[int]:
    """``counts[r]`` = number of extensions with exactly ``r`` vertices after ``alpha``."""
    n = o.n
    if not 0 <= alpha < n:
        raise ValueError(f"vertex {alpha} out of range")
    if engine == "brute":
        ok = _extension_mask(o)
        after = (n - 1) - _rank_table(n)[ok][:, alpha].astype(np.int64)
        return [int(x) for x in np.bincount(after, minlength=n)]
    if engine != "dp":
        raise ValueError(f"unknown engine {engine!r}")
    guard(n, REFINED_DP_LIMIT, "refined order-ideal DP")
    p = to_poset(o)
    down, up = p.down, p.up
    fwd = _ideal_sweep(n, down)
    # Completions of a down-set I = orderings of the up-set complement,
    # i.e. forward counts of the reversed poset on the complementary set.
    bwd = _ideal_sweep(n, up)
    full = (1 << n) - 1
    counts = [0] * n
    for k in range(n):
        for ideal, ways in fwd[k].items():
            if ideal >> alpha & 1 or down[alpha] & ~ideal:
                continue
            rest = full & ~(ideal | (1 << alpha))
            counts[n - 1 - k] += ways * bwd[n - 1 - k].get(rest, 0)
    return counts


def multinomial(parts) -> int:
    parts = list(parts)
    if any(p < 0 for p in parts):
        return 0
    out = math.factorial(sum(parts))
    for p in parts:
        out //= math.factorial(p)
    return out


def refined_by_decomposition(parts, labels=None) -> list[int]:
    """Refined counts of a wedge at the shared vertex, from its summands.

    ``parts`` is a list of ``(orientation, alpha)`` where ``alpha`` is the
    local index of the shared vertex in each summand.  ``labels`` optionally
    gives, per part, the global name of each local vertex; it is used only
    to reject summands that overlap beyond the shared vertex.
    """
    if not parts:
        raise ValueError("need at least one summand")
    if labels is not None:
        _check_wedge_labels(parts, labels)
    sizes = [o.n for o, _ in parts]
    total = sum(sizes) - len(parts) + 1
    refined = [count_refined(o, a) for o, a in parts]
    out = [0] * total
    for rs in itertools.product(*(range(s) for s in sizes)):
        term = 1
        for vec, r in zip(refined, rs):
            term *= vec[r]
            if not term:
                break
        if not term:
            continue
        r = sum(rs)
        term *= multinomial(rs) * multinomial(s - ri - 1 for s, ri in zip(sizes, rs))
        out[r] += term
    return out


def count_by_decomposition(parts, labels=None) -> int:
    return sum(refined_by_decomposition(parts, labels))


def _check_wedge_labels(parts, labels):
    if len(labels) != len(parts):
        raise ValueError("one label list per summand")
    shared = None
    for (o, a), lab in zip(parts, labels):
        if len(lab) != o.n:
            raise ValueError("label list length must match summand size")
        if shared is None:
            shared = lab[a]
        elif lab[a] != shared:
            raise GraphFormatError("summands do not share the same wedge vertex")
    for i, j in itertools.combinations(range(len(parts)), 2):
        common = set(labels[i]) & set(labels[j])
        if common != {shared}:
            raise GraphFormatError(f"summands {i} and {j} overlap in {sorted(common)}, not just the wedge vertex")


def wedge(parts) -> tuple[Orientation, int, list[list[int]]]:
    """Glue summands at their ``alpha``.  The shared vertex becomes 0.

    Returns the glued orientation, its shared vertex, and per-part maps from
    local to global labels.
    """
    maps = []
    nxt = 1
    pairs = []
    for o, a in parts:
        m = []
        for v in range(o.n):
            if v == a:
                m.append(0)
            else:
                m.append(nxt)
                nxt += 1
        maps.append(m)
        pairs.extend((m[x], m[y]) for x, y in o.pairs())
    g = Graph(nxt, tuple(pairs))
    bits = 0
    for i, (u, v) in enumerate(g.edges):
        if (v, u) in set(pairs):
            bits |= 1 << i
    return Orientation(g, bits), 0, maps


def split_at(o: Orientation, alpha: int) -> list[tuple[Orientation, int]]:
    """Split at a vertex into one summand per component of the graph minus ``alpha``."""
    from .graph import components, induced_subgraph

    g = o.graph
    directed = set(o.pairs())
    out = []
    for comp in components(g, 1 << alpha):
        sub, old = induced_subgraph(g, comp | {alpha})
        bits = 0
        for i, (u, v) in enumerate(sub.edges):
            if (old[v], old[u]) in directed:
                bits |= 1 << i
        out.append((Orientation(sub, bits), old.index(alpha)))
    return out


def monotonicity_check(o: Orientation, alpha: int) -> Verification:
    """Refined counts are monotone at an extreme vertex, with a zero at the far end."""
    maximal, minimal = o.is_maximal(alpha), o.is_minimal(alpha)
    if not (maximal or minimal):
        raise ValueError(f"vertex {alpha} is neither maximal nor minimal")
    counts = count_refined(o, alpha)
    isolated = o.graph.adj[alpha] == 0
    fails = []
    if maximal and any(x < y for x, y in zip(counts, counts[1:])):
        fails.append("maximal vertex: counts not non-increasing")
    if minimal and any(x > y for x, y in zip(counts, counts[1:])):
        fails.append("minimal vertex: counts not non-decreasing")
    if not isolated:
        if maximal and counts[-1] != 0:
            fails.append("maximal non-isolated vertex: last count not zero")
        if minimal and counts[0] != 0:
            fails.append("minimal non-isolated vertex: first count not zero")
    return Verification(
        "monotonicity",
        not fails,
        {"alpha": alpha, "counts": counts, "maximal": maximal, "minimal": minimal},
        tuple(fails),
    )


def resolve_workers(workers: int | None = None) -> int:
    """``GAMMACONE_THREADS`` caps worker processes; 0 means one per CPU."""
    if workers is None:
        workers = int(os.environ.get("GAMMACONE_THREADS", "1") or 1)
    if workers <= 0:
        workers = os.cpu_count() or 1
    return workers


@dataclass(frozen=True)
class GammaVector:
    graph: Graph
    sigma: dict[int, int]  # orientation bits -> count, ascending bits

    @property
    def maximum(self) -> int:
        return max(self.sigma.values())

    @property
    def argmax(self) -> list[int]:
        m = self.maximum
        return [b for b, s in self.sigma.items() if s == m]

    @property
    def multiset(self) -> list[int]:
        return sorted(self.sigma.values(), reverse=True)

    def notation(self) -> str:
        """Compact form such as ``2(6,2,2,2)`` when every value occurs an even number of times."""
        ms = self.multiset
        counts = Counter(ms)
        if all(c % 2 == 0 for c in counts.values()):
            return "2(" + ",".join(map(str, ms[::2])) + ")"
        return "(" + ",".join(map(str, ms)) + ")"

    def total(self) -> int:
        return sum(self.sigma.values())

    def to_json(self) -> dict:
        width = max(self.graph.m, 1)
        fmt = lambda b: "0b" + format(b, f"0{width}b")  # noqa: E731
        return {
            "entries": [{"orientation_bits": fmt(b), "sigma": str(s)} for b, s in self.sigma.items()],
            "summary": {
                "max": str(self.maximum),
                "argmax_bits": [fmt(b) for b in self.argmax],
                "multiset": self.notation(),
            },
        }


def _sigma_of(args):
    g, bits = args
    return count_ideals_dp(Orientation(g, bits))


def gamma_vector(g: Graph, workers: int | None = None) -> GammaVector:
    """Chamber count of every acyclic orientation."""
    orients = list(enumerate_acyclic_orientations(g))
    workers = resolve_workers(workers)
    if workers > 1 and len(orients) >= PARALLEL_MIN_ORIENTATIONS:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            values = list(ex.map(_sigma_of, [(g, o.bits) for o in orients], chunksize=256))
    else:
        values = [count_ideals_dp(o) for o in orients]
    return GammaVector(g, {o.bits: v for o, v in zip(orients, values)})
