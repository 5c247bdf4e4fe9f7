"""Acyclic orientations, the posets they generate, and principal orientations.

An orientation is an int: bit ``i`` describes canonical edge ``i = (a, b)``
with ``a < b`` as integers; bit 0 means ``a <_o b`` and bit 1 means
``b <_o a``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import ConsistencyError, CyclicOrientationError, NotBipartiteError, guard
from .graph import ENUMERATION_LIMIT, Graph, bits_of, classify, components

__all__ = [
    "Orientation",
    "Poset",
    "PrincipalDecomposition",
    "LinearOrder",
    "make_orientation",
    "parse_orientation_bits",
    "enumerate_acyclic_orientations",
    "is_acyclic_relation",
    "transitive_closure",
    "transitive_reduction",
    "to_poset",
    "hasse_reduction_properties",
    "principal_decomposition",
    "principal_orientation",
    "is_principal",
    "reverse",
    "is_linear_extension",
    "flip_to_principal",
    "flip_until_principal",
]


def is_acyclic_relation(n: int, pairs) -> bool:
    """Kahn's algorithm on the directed pairs ``(a, b)`` meaning ``a < b``."""
    indeg = [0] * n
    out = [[] for _ in range(n)]
    for a, b in pairs:
        out[a].append(b)
        indeg[b] += 1
    stack = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen == n


def _topological(n: int, pairs) -> list[int]:
    indeg = [0] * n
    out = [[] for _ in range(n)]
    for a, b in pairs:
        out[a].append(b)
        indeg[b] += 1
    stack = sorted((v for v in range(n) if indeg[v] == 0), reverse=True)
    order = []
    while stack:
        v = stack.pop()
        order.append(v)
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    if len(order) != n:
        raise CyclicOrientationError("relation contains a directed cycle")
    return order


def transitive_closure(n: int, pairs) -> tuple[int, ...]:
    """``up[a]`` = bitmask of every ``b`` with ``a < b`` in the closure."""
    order = _topological(n, pairs)
    succ = [0] * n
    for a, b in pairs:
        succ[a] |= 1 << b
    up = [0] * n
    for v in reversed(order):
        m = succ[v]
        for w in bits_of(succ[v]):
            m |= up[w]
        up[v] = m
    return tuple(up)


def transitive_reduction(n: int, pairs) -> frozenset[tuple[int, int]]:
    """Delete every pair ``a < b`` that is also reachable by a path of length >= 2."""
    pairs = set(pairs)
    up = transitive_closure(n, pairs)
    keep = set()
    for a, b in pairs:
        reducible = any(up[c] >> b & 1 for c in bits_of(up[a]) if c != b)
        if not reducible:
            keep.add((a, b))
    return frozenset(keep)


@dataclass(frozen=True)
class Orientation:
    graph: Graph
    bits: int
    acyclic: bool = field(init=False, compare=False)

    def __post_init__(self):
        if not 0 <= self.bits < (1 << self.graph.m):
            raise ValueError(f"orientation bits {self.bits:#b} do not fit {self.graph.m} edges")
        acyclic = classify(self.graph).is_acyclic or is_acyclic_relation(self.graph.n, self.pairs())
        object.__setattr__(self, "acyclic", acyclic)

    def pairs(self) -> list[tuple[int, int]]:
        """Directed edges ``(a, b)`` meaning ``a <_o b``."""
        out = []
        for i, (u, v) in enumerate(self.graph.edges):
            out.append((v, u) if self.bits >> i & 1 else (u, v))
        return out

    @property
    def n(self) -> int:
        return self.graph.n

    def to_bitstring(self) -> str:
        """``0b`` + bits, most significant edge first; edge 0 is the last digit."""
        return "0b" + format(self.bits, f"0{max(self.graph.m, 1)}b")

    def require_acyclic(self):
        if not self.acyclic:
            raise CyclicOrientationError(f"orientation {self.to_bitstring()} has a directed cycle")
        return self

    def in_mask(self, v: int) -> int:
        """Neighbours below ``v``."""
        m = 0
        for a, b in self.pairs():
            if b == v:
                m |= 1 << a
        return m

    def out_mask(self, v: int) -> int:
        m = 0
        for a, b in self.pairs():
            if a == v:
                m |= 1 << b
        return m

    def is_minimal(self, v: int) -> bool:
        return self.in_mask(v) == 0

    def is_maximal(self, v: int) -> bool:
        return self.out_mask(v) == 0


def make_orientation(g: Graph, bits) -> Orientation:
    """Build from an int bitmask or a per-edge sequence of 0/1 directions."""
    if not isinstance(bits, int):
        seq = list(bits)
        if len(seq) != g.m:
            raise ValueError(f"need {g.m} edge directions, got {len(seq)}")
        bits = sum((1 << i) for i, b in enumerate(seq) if b)
    return Orientation(g, bits)


def orientation_from_pairs(g: Graph, pairs) -> Orientation:
    bits = 0
    for a, b in pairs:
        i = g.edge_index(a, b)
        if a > b:
            bits |= 1 << i
    return Orientation(g, bits)


def parse_orientation_bits(text: str) -> int:
    """Accept ``0b101``, ``o=0b101`` or a bare ``101``."""
    t = text.strip()
    if t.startswith("o="):
        t = t[2:]
    if t.startswith(("0b", "0B")):
        t = t[2:]
    if not t or set(t) - {"0", "1"}:
        raise ValueError(f"not a bitstring: {text!r}")
    return int(t, 2)


def enumerate_acyclic_orientations(g: Graph) -> Iterator[Orientation]:
    """Every acyclic orientation once, in increasing bit order."""
    guard(g.m, ENUMERATION_LIMIT, "orientation enumeration (edges)")
    guard(g.n, ENUMERATION_LIMIT, "orientation enumeration (vertices)")
    for bits in range(1 << g.m):
        o = Orientation(g, bits)
        if o.acyclic:
            yield o


def reverse(o: Orientation) -> Orientation:
    return Orientation(o.graph, o.bits ^ ((1 << o.graph.m) - 1))


@dataclass(frozen=True)
class Poset:
    """Strict order on ``0..n-1`` as up-set bitmasks plus its Hasse diagram."""

    n: int
    up: tuple[int, ...]
    hasse: frozenset[tuple[int, int]]

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "Poset":
        pairs = list(pairs)
        return cls(n, transitive_closure(n, pairs), transitive_reduction(n, pairs))

    def less(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    @property
    def down(self) -> tuple[int, ...]:
        d = [0] * self.n
        for a in range(self.n):
            for b in bits_of(self.up[a]):
                d[b] |= 1 << a
        return tuple(d)

    def relations(self) -> frozenset[tuple[int, int]]:
        return frozenset((a, b) for a in range(self.n) for b in bits_of(self.up[a]))

    def reversed(self) -> "Poset":
        return Poset.from_pairs(self.n, [(b, a) for a, b in self.hasse])


def to_poset(o: Orientation) -> Poset:
    o.require_acyclic()
    return Poset.from_pairs(o.n, o.pairs())


@dataclass(frozen=True)
class Verification:
    """Outcome of a named consistency check; failures are listed, not raised."""

    name: str
    passed: bool
    details: dict = field(default_factory=dict)
    failures: tuple[str, ...] = ()

    def __bool__(self):
        return self.passed


def hasse_reduction_properties(p: Poset) -> Verification:
    red = transitive_reduction(p.n, p.hasse)
    idempotent = red == p.hasse
    closure_ok = transitive_closure(p.n, p.hasse) == p.up
    irreflexive = all(not (p.up[a] >> a & 1) for a in range(p.n))
    transitive = all(p.up[b] & ~p.up[a] == 0 for a in range(p.n) for b in bits_of(p.up[a]))
    fails = tuple(
        name
        for name, ok in (
            ("reduction not idempotent", idempotent),
            ("closure(reduction) != closure", closure_ok),
            ("relation not irreflexive", irreflexive),
            ("relation not transitive", transitive),
        )
        if not ok
    )
    return Verification(
        "hasse_reduction",
        not fails,
        {"hasse_edges": len(p.hasse), "relations": sum(bin(u).count("1") for u in p.up)},
        fails,
    )


@dataclass(frozen=True)
class PrincipalDecomposition:
    pi1: frozenset[int]
    pi2: frozenset[int]

    def swapped(self) -> "PrincipalDecomposition":
        return PrincipalDecomposition(self.pi2, self.pi1)

    def is_valid_for(self, g: Graph) -> bool:
        if self.pi1 & self.pi2 or (self.pi1 | self.pi2) != frozenset(range(g.n)):
            return False
        return all((u in self.pi1) != (v in self.pi1) for u, v in g.edges)


def principal_decomposition(g: Graph, side: int = 0) -> PrincipalDecomposition:
    """Two-colouring of a connected bipartite graph.

    ``side=0`` puts vertex 0 in ``pi1``; ``side=1`` returns the swap.
    """
    if side not in (0, 1):
        raise ValueError("side must be 0 or 1")
    if len(components(g)) != 1:
        raise ValueError("principal decomposition needs a connected graph")
    color = [-1] * g.n
    color[0] = 0
    queue = [0]
    for v in queue:
        for w in g.neighbors(v):
            if color[w] < 0:
                color[w] = 1 - color[v]
                queue.append(w)
            elif color[w] == color[v]:
                raise NotBipartiteError(f"odd cycle through edge ({v}, {w}); no principal decomposition")
    d = PrincipalDecomposition(
        frozenset(v for v in range(g.n) if color[v] == 0),
        frozenset(v for v in range(g.n) if color[v] == 1),
    )
    return d.swapped() if side else d


def principal_orientation(g: Graph, d: PrincipalDecomposition) -> Orientation:
    """Every edge directed from its ``pi1`` end to its ``pi2`` end."""
    if not d.is_valid_for(g):
        raise ValueError("decomposition is not a proper 2-colouring of this graph")
    bits = 0
    for i, (u, _v) in enumerate(g.edges):
        if u in d.pi2:
            bits |= 1 << i
    return Orientation(g, bits)


def is_principal(o: Orientation) -> bool:
    """True when no vertex has both an incoming and an outgoing edge."""
    return all(o.in_mask(v) == 0 or o.out_mask(v) == 0 for v in range(o.n))


@dataclass(frozen=True)
class LinearOrder:
    """Permutation of ``0..n-1``; position in ``sequence`` is the rank."""

    sequence: tuple[int, ...]

    def __post_init__(self):
        seq = tuple(self.sequence)
        if sorted(seq) != list(range(len(seq))):
            raise ValueError("a linear order must be a permutation of 0..n-1")
        object.__setattr__(self, "sequence", seq)

    @property
    def rank(self) -> list[int]:
        r = [0] * len(self.sequence)
        for i, v in enumerate(self.sequence):
            r[v] = i
        return r

    def __len__(self):
        return len(self.sequence)


def is_linear_extension(c: LinearOrder | Sequence[int], o: Orientation) -> bool:
    if not isinstance(c, LinearOrder):
        c = LinearOrder(tuple(c))
    if len(c) != o.n:
        raise ValueError(f"order has {len(c)} elements, orientation has {o.n} vertices")
    rank = c.rank
    return all(rank[a] < rank[b] for a, b in o.pairs())


def flip_to_principal(o: Orientation, alpha: int) -> Orientation:
    """One improving step at a vertex with both a predecessor and a successor.

    The tree splits at ``alpha`` into the branches entered by an outgoing edge
    (kept) and by an incoming edge (reversed).
    """
    g = o.graph
    if not classify(g).is_tree:
        raise ValueError("flip_to_principal is defined for trees")
    o.require_acyclic()
    below, above = o.in_mask(alpha), o.out_mask(alpha)
    if not below or not above:
        raise ValueError(f"vertex {alpha} is already minimal or maximal; no flip defined")
    minus = 0
    for comp in components(g, 1 << alpha):
        cm = sum(1 << v for v in comp)
        if cm & below:
            minus |= cm
    minus |= 1 << alpha
    bits = o.bits
    for i, (u, v) in enumerate(g.edges):
        if minus >> u & 1 and minus >> v & 1:
            bits ^= 1 << i
    flipped = Orientation(g, bits)
    if not flipped.acyclic:
        raise ConsistencyError("flip produced a cycle on a tree")
    return flipped


def flip_until_principal(o: Orientation) -> list[Orientation]:
    """Iterate the flip at the smallest eligible vertex; returns the whole path."""
    path = [o]
    while True:
        cur = path[-1]
        eligible = [v for v in range(cur.n) if cur.in_mask(v) and cur.out_mask(v)]
        if not eligible:
            return path
        if len(path) > (1 << cur.graph.m):
            raise ConsistencyError("flip sequence failed to terminate")
        path.append(flip_to_principal(cur, eligible[0]))
