"""Finite simple graphs on dense vertex sets ``0..l-1``.

Vertex sets are handled internally as Python ints used as bitmasks, which
gives arbitrary width for free.  The public API returns ``frozenset``.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .errors import GraphFormatError

__all__ = [
    "Graph",
    "GraphClass",
    "parse_graph",
    "format_graph",
    "named_family",
    "classify",
    "random_tree",
    "prufer_decode",
    "all_labeled_trees",
    "nonisomorphic_trees",
    "tree_canonical_form",
    "connected_component",
    "components",
    "nbd",
    "induced_subgraph",
    "mask_of",
    "bits_of",
]

#: Hard cap for operations that enumerate all orientations or orderings.
ENUMERATION_LIMIT = 24


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph.

    ``edges`` is stored in canonical order: each pair is ``(min, max)`` and
    the tuple is sorted.  Orientation bitmasks index into this order.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    names: tuple[str, ...] | None = None
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphFormatError("a graph needs at least one vertex")
        canon = []
        for u, v in self.edges:
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphFormatError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            canon.append((min(u, v), max(u, v)))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise GraphFormatError(f"duplicate edge {a}")
        if self.names is not None and len(self.names) != self.n:
            raise GraphFormatError("names must label every vertex")
        adj = [0] * self.n
        for u, v in canon:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "edges", tuple(canon))
        object.__setattr__(self, "adj", tuple(adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> list[int]:
        return bits_of(self.adj[v])

    def edge_index(self, u: int, v: int) -> int:
        return self.edges.index((min(u, v), max(u, v)))

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def label(self, v: int) -> str:
        return self.names[v] if self.names else str(v)


@dataclass(frozen=True)
class GraphClass:
    is_connected: bool
    is_acyclic: bool
    n_components: int

    @property
    def is_tree(self) -> bool:
        return self.is_connected and self.is_acyclic

    @property
    def is_forest(self) -> bool:
        return self.is_acyclic


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document.

    An optional first content line ``vertices <l>`` fixes the vertex count;
    otherwise it is one more than the largest index mentioned.  Lines that are
    empty or start with ``#`` are skipped.
    """
    declared = None
    pairs = []
    seen_content = False
    for lineno, raw in enumerate(text.replace("\r\n", "\n").split("\n"), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "vertices":
            if seen_content or len(parts) != 2:
                raise GraphFormatError(f"line {lineno}: misplaced or malformed header")
            try:
                declared = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            if declared < 1:
                raise GraphFormatError(f"line {lineno}: vertex count must be >= 1")
            seen_content = True
            continue
        seen_content = True
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected '<u> <v>', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex index")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at {u}")
        if declared is not None and max(u, v) >= declared:
            raise GraphFormatError(f"line {lineno}: vertex {max(u, v)} >= declared count {declared}")
        pairs.append((u, v))
    if declared is None:
        if not pairs:
            raise GraphFormatError("empty document without a 'vertices' header")
        declared = 1 + max(max(p) for p in pairs)
    seen = set()
    for u, v in pairs:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key}")
        seen.add(key)
    return Graph(declared, tuple(pairs))


def format_graph(g: Graph) -> str:
    lines = [f"vertices {g.n}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def named_family(family: str, n: int) -> Graph:
    """Build ``path``, ``star``, ``D`` or ``E`` on ``n`` vertices.

    ``path(n)`` is the linear graph of type A_n.  ``star(n)`` is centred at 0.
    ``D(n)`` and ``E(n)`` are a path ``0..n-2`` plus leaf ``n-1`` attached at
    vertex 1 or vertex 2 respectively.
    """
    fam = family.lower() if family.lower() in ("path", "star") else family.upper()
    if fam in ("A",):
        fam = "path"
    if fam == "path":
        if n < 1:
            raise ValueError("path needs n >= 1")
        edges = [(i, i + 1) for i in range(n - 1)]
    elif fam == "star":
        if n < 2:
            raise ValueError("star needs n >= 2")
        edges = [(0, i) for i in range(1, n)]
    elif fam in ("D", "E"):
        if n < 4:
            raise ValueError(f"{fam} needs n >= 4")
        edges = [(i, i + 1) for i in range(n - 2)]
        edges.append((1 if fam == "D" else 2, n - 1))
    else:
        raise ValueError(f"unknown family {family!r}; expected path, star, D or E")
    return Graph(n, tuple(edges))


def connected_component(g: Graph, removed, v: int) -> frozenset[int]:
    """Vertex set of the component containing ``v`` after deleting ``removed``."""
    rmask = removed if isinstance(removed, int) else mask_of(removed)
    if rmask >> v & 1:
        raise ValueError(f"vertex {v} is in the removed set")
    return frozenset(bits_of(_component_mask(g, rmask, v)))


def _component_mask(g: Graph, removed_mask: int, v: int) -> int:
    allowed = g.all_mask & ~removed_mask
    seen = 1 << v
    frontier = seen
    adj = g.adj
    while frontier:
        nxt = 0
        for u in bits_of(frontier):
            nxt |= adj[u]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(g: Graph, removed=0) -> list[frozenset[int]]:
    rmask = removed if isinstance(removed, int) else mask_of(removed)
    left = g.all_mask & ~rmask
    out = []
    while left:
        v = (left & -left).bit_length() - 1
        comp = _component_mask(g, rmask, v)
        out.append(frozenset(bits_of(comp)))
        left &= ~comp
    return out


def classify(g: Graph) -> GraphClass:
    k = len(components(g))
    return GraphClass(is_connected=k == 1, is_acyclic=g.m == g.n - k, n_components=k)


def nbd(g: Graph, w: int) -> frozenset[int]:
    return frozenset(g.neighbors(w))


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, list[int]]:
    """Relabel the induced subgraph densely; also return new->old labels."""
    old = sorted(vertices)
    new = {v: i for i, v in enumerate(old)}
    edges = tuple((new[u], new[v]) for u, v in g.edges if u in new and v in new)
    return Graph(len(old), edges), old


# -- tree generators ---------------------------------------------------------

def prufer_decode(seq, n: int | None = None) -> Graph:
    """Labelled tree on ``len(seq) + 2`` vertices from its Prüfer sequence."""
    seq = list(seq)
    if n is None:
        n = len(seq) + 2
    if n == 1:
        return Graph(1, ())
    if len(seq) != n - 2:
        raise ValueError("Prüfer sequence must have length n - 2")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return Graph(n, tuple(edges))


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree via a seeded Prüfer sequence."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n <= 2:
        return Graph(n, ((0, 1),) if n == 2 else ())
    rng = random.Random(seed)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)


def all_labeled_trees(n: int):
    """Every labelled tree on ``n`` vertices, one per Prüfer sequence."""
    if n <= 2:
        yield Graph(n, ((0, 1),) if n == 2 else ())
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def _rooted_code(g: Graph, root: int, parent: int) -> str:
    kids = sorted(_rooted_code(g, c, root) for c in g.neighbors(root) if c != parent)
    return "(" + "".join(kids) + ")"


def _centers(g: Graph) -> list[int]:
    deg = [g.degree(v) for v in range(g.n)]
    layer = [v for v in range(g.n) if deg[v] <= 1]
    left = g.n
    removed = set()
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            removed.add(v)
            for u in g.neighbors(v):
                if u not in removed:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    return [v for v in range(g.n) if v not in removed]


def tree_canonical_form(g: Graph) -> str:
    """AHU string, identical for isomorphic trees."""
    if not classify(g).is_tree:
        raise ValueError("canonical form is only defined here for trees")
    return min(_rooted_code(g, c, -1) for c in _centers(g))


def nonisomorphic_trees(n: int) -> list[Graph]:
    """One representative per isomorphism class of trees on ``n`` vertices.

    Built by leaf extension from the ``n - 1`` classes, so it scales far
    beyond what Prüfer enumeration allows.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    level = {"()": Graph(1, ())}
    for size in range(2, n + 1):
        nxt: dict[str, Graph] = {}
        for t in level.values():
            for v in range(t.n):
                grown = Graph(size, t.edges + ((v, size - 1),))
                nxt.setdefault(tree_canonical_form(grown), grown)
        level = nxt
    return [level[k] for k in sorted(level)]
