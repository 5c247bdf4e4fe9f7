"""Principal number of a tree and the block decomposition of its principal cone.

Orderings ``d`` of the first colour class ``pi1`` are grouped by the
components they cut out: for ``v`` in ``pi1``, ``component(d, v)`` is the
component containing ``v`` once every ``pi1`` vertex ordered before ``v`` is
deleted.  Two orderings are equivalent when all these components agree.
Each class is a rooted tree on ``pi1``; lifting it together with the
principal orientation gives a rooted tree on all vertices (a *block*), and
the hook length counts of the blocks add up to the principal number.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .count import count_ideals_dp
from .errors import ConsistencyError, NotATreeError
from .graph import Graph, bits_of, classify, connected_component, mask_of, nbd
from .order import (
    LinearOrder,
    PrincipalDecomposition,
    Verification,
    is_linear_extension,
    principal_orientation,
    transitive_reduction,
)

__all__ = [
    "RootedTree",
    "OrdTildeClass",
    "Block",
    "BlockReport",
    "gamma_dv",
    "ordtilde_classes",
    "principal_number_formula",
    "principal_number_induction",
    "principal_number_dp",
    "nbd",
    "lift",
    "hook_length_count",
    "block_decomposition",
    "classify_extension",
    "verify_block_characterizations",
    "is_minimal_rooted_tree",
]

#: Above this many pi1 vertices the factorial engine hands over to the recursive one.
FACTORIAL_ENGINE_LIMIT = 10


def _require_tree(g: Graph):
    if not classify(g).is_tree:
        raise NotATreeError("operation is defined for trees only")


@dataclass(frozen=True)
class RootedTree:
    """Parent map is the source of truth; edges point parent -> child."""

    vertices: frozenset[int]
    parent: tuple[tuple[int, int], ...]  # sorted (child, parent)
    root: int
    _sizes: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        par = dict(self.parent)
        object.__setattr__(self, "parent", tuple(sorted(par.items())))
        if self.root not in self.vertices or self.root in par:
            raise ValueError("root must be a vertex without a parent")
        if set(par) != set(self.vertices) - {self.root}:
            raise ValueError("every non-root vertex needs exactly one parent")
        if not set(par.values()) <= set(self.vertices):
            raise ValueError("parent outside the vertex set")
        # every vertex must reach the root
        for v in self.vertices:
            seen = set()
            while v != self.root:
                if v in seen:
                    raise ValueError("parent map contains a cycle")
                seen.add(v)
                v = par[v]
        object.__setattr__(self, "_sizes", {})

    @classmethod
    def from_edges(cls, vertices, edges) -> "RootedTree":
        """Build from directed ``(parent, child)`` pairs; the root is the unique source."""
        vertices = frozenset(vertices)
        par = {}
        for p, c in edges:
            if c in par:
                raise ValueError(f"vertex {c} has two immediate predecessors")
            par[c] = p
        roots = vertices - set(par)
        if len(roots) != 1:
            raise ValueError(f"expected a unique minimal vertex, found {sorted(roots)}")
        return cls(vertices, tuple(par.items()), next(iter(roots)))

    @property
    def parent_map(self) -> dict[int, int]:
        return dict(self.parent)

    def edges(self) -> list[tuple[int, int]]:
        return [(p, c) for c, p in self.parent]

    def children(self) -> dict[int, list[int]]:
        kids = {v: [] for v in self.vertices}
        for c, p in self.parent:
            kids[p].append(c)
        return kids

    def ancestors(self, v: int) -> list[int]:
        """Strict ancestors, nearest first."""
        par = self.parent_map
        out = []
        while v != self.root:
            v = par[v]
            out.append(v)
        return out

    def less(self, a: int, b: int) -> bool:
        return a in self.ancestors(b)

    def relations(self) -> frozenset[tuple[int, int]]:
        return frozenset((a, v) for v in self.vertices for a in self.ancestors(v))

    def subtree_sizes(self) -> dict[int, int]:
        if not self._sizes:
            kids = self.children()
            sizes = {}
            order = [self.root]
            for v in order:
                order.extend(kids[v])
            for v in reversed(order):
                sizes[v] = 1 + sum(sizes[c] for c in kids[v])
            self._sizes.update(sizes)
        return dict(self._sizes)

    def subtree(self, v: int) -> frozenset[int]:
        kids = self.children()
        out = [v]
        for u in out:
            out.extend(kids[u])
        return frozenset(out)

    def restrict(self, keep) -> "RootedTree":
        """Induced order on ``keep``, reduced back to a rooted tree."""
        keep = frozenset(keep)
        par = {}
        for v in keep:
            for a in self.ancestors(v):
                if a in keep:
                    par[v] = a
                    break
        roots = keep - set(par)
        if len(roots) != 1:
            raise ValueError("restriction is not rooted")
        return RootedTree(keep, tuple(par.items()), next(iter(roots)))

    def lex_min_extension(self) -> tuple[int, ...]:
        """Smallest linear extension in lexicographic order (greedy)."""
        kids = self.children()
        avail = [self.root]
        out = []
        while avail:
            avail.sort()
            v = avail.pop(0)
            out.append(v)
            avail.extend(kids[v])
        return tuple(out)


@dataclass(frozen=True)
class OrdTildeClass:
    """One equivalence class of orderings of ``pi1``."""

    representative: tuple[int, ...]  # lexicographically smallest ordering in the class
    hasse: RootedTree
    components: dict  # v -> frozenset, v in pi1

    def sizes(self) -> dict[int, int]:
        return {v: len(c) for v, c in self.components.items()}

    def term(self) -> Fraction:
        return Fraction(1, math.prod(len(c) for c in self.components.values()))


def _component_masks(g: Graph, pi1_order) -> dict[int, int]:
    from .graph import _component_mask

    removed = 0
    out = {}
    for v in pi1_order:
        out[v] = _component_mask(g, removed, v)
        removed |= 1 << v
    return out


def gamma_dv(g: Graph, d, v: int, pi1=None) -> frozenset[int]:
    """Component containing ``v`` after deleting the ``pi1`` vertices ordered before it."""
    seq = list(d.sequence if isinstance(d, LinearOrder) else d)
    if pi1 is not None and set(seq) != set(pi1):
        raise ValueError("d must order exactly pi1")
    if v not in seq:
        raise ValueError(f"vertex {v} is not in pi1")
    before = seq[: seq.index(v)]
    return connected_component(g, before, v)


def _class_from_masks(masks: dict[int, int], representative) -> OrdTildeClass:
    comps = {v: frozenset(bits_of(m)) for v, m in masks.items()}
    par = {}
    for v in masks:
        # parent = the strict predecessor with the smallest component containing v
        best = None
        for w, m in masks.items():
            if w != v and m >> v & 1 and (best is None or bin(m).count("1") < bin(masks[best]).count("1")):
                best = w
        if best is not None:
            par[v] = best
    root = representative[0]
    return OrdTildeClass(tuple(representative), RootedTree(frozenset(masks), tuple(par.items()), root), comps)


def _classes_factorial(g: Graph, pi1) -> list[OrdTildeClass]:
    seen: dict[tuple, OrdTildeClass] = {}
    key_order = sorted(pi1)
    for d in itertools.permutations(key_order):
        masks = _component_masks(g, d)
        key = tuple(masks[v] for v in key_order)
        if key not in seen:
            seen[key] = _class_from_masks(masks, d)
    return list(seen.values())


def _classes_recursive(g: Graph, pi1) -> list[OrdTildeClass]:
    """Wedge construction: choose the root ``v``, then independent classes per branch."""
    pi1_mask = mask_of(pi1)
    from .graph import _component_mask

    @lru_cache(maxsize=None)
    def classes(sub: int) -> tuple[tuple[tuple[int, int], ...], ...]:
        # each class encoded as sorted (vertex, component mask) pairs
        inside = sub & pi1_mask
        if not inside:
            return ((),)
        out = []
        outside = g.all_mask & ~sub
        for v in bits_of(inside):
            branches = []
            for w in bits_of(g.adj[v] & sub):
                branches.append(_component_mask(g, outside | (1 << v), w))
            for combo in itertools.product(*(classes(b) for b in branches)):
                merged = [(v, sub)]
                for part in combo:
                    merged.extend(part)
                out.append(tuple(sorted(merged)))
        return tuple(out)

    result = []
    for enc in classes(g.all_mask):
        masks = dict(enc)
        comps_tree = _class_from_masks(masks, (min(masks, key=lambda u: -bin(masks[u]).count("1")),))
        rep = comps_tree.hasse.lex_min_extension()
        result.append(OrdTildeClass(rep, comps_tree.hasse, comps_tree.components))
    return result


def ordtilde_classes(g: Graph, dec: PrincipalDecomposition, engine: str = "auto") -> list[OrdTildeClass]:
    """Equivalence classes of orderings of ``dec.pi1``, sorted by representative."""
    _require_tree(g)
    if not dec.is_valid_for(g):
        raise ValueError("decomposition does not fit the graph")
    pi1 = sorted(dec.pi1)
    if not pi1:
        return []
    if engine == "auto":
        engine = "factorial" if len(pi1) <= FACTORIAL_ENGINE_LIMIT else "recursive"
    if engine == "factorial":
        out = _classes_factorial(g, pi1)
    elif engine == "recursive":
        out = _classes_recursive(g, pi1)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return sorted(out, key=lambda c: c.representative)


def principal_number_formula(g: Graph, dec: PrincipalDecomposition, classes=None) -> int:
    """``l!`` times the sum over classes of ``1 / prod(component sizes)``."""
    _require_tree(g)
    if g.n == 1:
        return 1
    if classes is None:
        classes = ordtilde_classes(g, dec)
    total = sum((c.term() for c in classes), Fraction(0))
    value = math.factorial(g.n) * total
    if value.denominator != 1:
        raise ConsistencyError(f"principal number formula is not integral: {value}")
    return int(value)


def principal_number_induction(g: Graph, dec: PrincipalDecomposition) -> int:
    """Recursion over the first vertex: ``s(T) = (1/|T|) sum_v prod_w s(T_vw)``.

    ``s(T)`` is the principal number divided by ``|T|!``; ``v`` runs over the
    ``pi1`` vertices of the subtree and ``T_vw`` over the branches at ``v``.
    """
    _require_tree(g)
    if not dec.is_valid_for(g):
        raise ValueError("decomposition does not fit the graph")
    pi1_mask = mask_of(dec.pi1)
    from .graph import _component_mask

    @lru_cache(maxsize=None)
    def ratio(sub: int) -> Fraction:
        size = bin(sub).count("1")
        if size == 1:
            return Fraction(1)
        outside = g.all_mask & ~sub
        acc = Fraction(0)
        for v in bits_of(sub & pi1_mask):
            prod = Fraction(1)
            for w in bits_of(g.adj[v] & sub):
                prod *= ratio(_component_mask(g, outside | (1 << v), w))
            acc += prod
        return acc / size

    value = math.factorial(g.n) * ratio(g.all_mask)
    if value.denominator != 1:
        raise ConsistencyError(f"induction formula is not integral: {value}")
    return int(value)


def principal_number_dp(g: Graph, dec: PrincipalDecomposition) -> int:
    return count_ideals_dp(principal_orientation(g, dec))


def lift(cls: OrdTildeClass, dec: PrincipalDecomposition, g: Graph) -> RootedTree:
    """Hasse diagram of the principal orientation together with the class order."""
    po = principal_orientation(g, dec)
    pairs = set(po.pairs()) | set(cls.hasse.edges())
    try:
        red = transitive_reduction(g.n, pairs)
    except Exception as exc:  # cyclic union
        raise ConsistencyError("lifted union has a directed cycle") from exc
    try:
        tree = RootedTree.from_edges(range(g.n), red)
    except ValueError as exc:
        raise ConsistencyError(f"lift is not a rooted tree: {exc}") from exc
    if g.n > 1 and tree.restrict(dec.pi1) != cls.hasse:
        raise ConsistencyError("lift restricted to pi1 differs from the class")
    return tree


def hook_length_count(t: RootedTree) -> int:
    """``n!`` over the product of subtree sizes."""
    n = len(t.vertices)
    denom = math.prod(t.subtree_sizes().values())
    q, r = divmod(math.factorial(n), denom)
    if r:
        raise ConsistencyError("hook length quotient is not integral")
    return q


@dataclass(frozen=True)
class Block:
    lifted: RootedTree
    cls: OrdTildeClass | None
    hook_count: int
    denominators: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "root": self.lifted.root,
            "parent_edges": [[c, p] for c, p in self.lifted.parent],
            "denominators": list(self.denominators),
            "count": str(self.hook_count),
        }


@dataclass(frozen=True)
class BlockReport:
    graph: Graph
    decomposition: PrincipalDecomposition
    blocks: tuple[Block, ...]
    total: int

    def counts(self) -> list[int]:
        return [b.hook_count for b in self.blocks]

    def to_json(self) -> dict:
        return {
            "pi1": sorted(self.decomposition.pi1),
            "pi2": sorted(self.decomposition.pi2),
            "blocks": [b.to_json() for b in self.blocks],
            "total": str(self.total),
        }


def block_decomposition(g: Graph, dec: PrincipalDecomposition, classes=None) -> BlockReport:
    """Lift every class and count its chambers by the hook length formula.

    Also enforces the size equality: for ``v`` in pi1 the class component
    and the lifted subtree have the same size, and pi2 vertices are leaves.
    """
    _require_tree(g)
    if g.n == 1:
        t = RootedTree(frozenset({0}), (), 0)
        return BlockReport(g, dec, (Block(t, None, 1, ()),), 1)
    if classes is None:
        classes = ordtilde_classes(g, dec)
    blocks = []
    for cls in classes:
        t = lift(cls, dec, g)
        sizes = t.subtree_sizes()
        for v, comp in cls.components.items():
            if sizes[v] != len(comp):
                raise ConsistencyError(f"size mismatch at {v}: class {len(comp)} vs lift {sizes[v]}")
        for v in dec.pi2:
            if sizes[v] != 1:
                raise ConsistencyError(f"pi2 vertex {v} is not a leaf of the lift")
        denoms = tuple(sorted((len(c) for c in cls.components.values()), reverse=True))
        blocks.append(Block(t, cls, hook_length_count(t), denoms))
    total = sum(b.hook_count for b in blocks)
    return BlockReport(g, dec, tuple(blocks), total)


def _extends_tree(rank, t: RootedTree) -> bool:
    return all(rank[p] < rank[c] for c, p in t.parent)


def classify_extension(c, report: BlockReport) -> int:
    """Index of the unique block whose rooted tree ``c`` extends."""
    if not isinstance(c, LinearOrder):
        c = LinearOrder(tuple(c))
    po = principal_orientation(report.graph, report.decomposition)
    if not is_linear_extension(c, po):
        raise ValueError("ordering does not extend the principal orientation")
    rank = c.rank
    hits = [i for i, b in enumerate(report.blocks) if _extends_tree(rank, b.lifted)]
    if len(hits) != 1:
        raise ConsistencyError(f"ordering extends {len(hits)} blocks, expected exactly one")
    return hits[0]


# -- characterisation checks ---------------------------------------------------

def _totally_ordered(t: RootedTree, verts) -> bool:
    verts = list(verts)
    return all(t.less(a, b) or t.less(b, a) for a, b in itertools.combinations(verts, 2))


def _single_reparents(t: RootedTree):
    """Rooted trees obtained by moving one vertex under a strict ancestor of its parent."""
    par = t.parent_map
    for v, p in par.items():
        for a in t.ancestors(p):
            new = dict(par)
            new[v] = a
            yield RootedTree(t.vertices, tuple(new.items()), t.root)


def _below_candidates(t: RootedTree):
    """Every rooted tree whose order is contained in ``t``'s (``t`` included)."""
    verts = sorted(t.vertices - {t.root})
    choices = [t.ancestors(v) for v in verts]
    for combo in itertools.product(*choices):
        yield RootedTree(t.vertices, tuple(zip(verts, combo)), t.root)


def is_minimal_rooted_tree(t: RootedTree, predicate, exhaustive: bool = False) -> bool:
    """No strictly weaker rooted tree satisfies ``predicate``.

    The conditions used here are closed upward under refinement for the
    "contains" part and downward for the "disorder" part, so it is enough to
    test the trees one reparenting step below ``t``; ``exhaustive=True``
    scans every weaker rooted tree instead.
    """
    cands = _below_candidates(t) if exhaustive else _single_reparents(t)
    for f in cands:
        if f != t and predicate(f):
            return False
    return True


def _cond_nbd_chain(g: Graph, dec: PrincipalDecomposition):
    nbds = [nbd(g, b) for b in sorted(dec.pi2)]
    return lambda f: all(_totally_ordered(f, nb) for nb in nbds)


def _cond_lift(g: Graph, dec: PrincipalDecomposition):
    po = principal_orientation(g, dec).pairs()
    pi2 = sorted(dec.pi2)

    def ok(f: RootedTree) -> bool:
        if not all(f.less(a, b) for a, b in po):
            return False
        return not any(f.less(a, b) or f.less(b, a) for a, b in itertools.combinations(pi2, 2))

    return ok


def _rooted_ancestor_masks(n: int):
    """Every rooted tree on ``0..n-1`` as ``(root, parent list, ancestor masks)``."""
    from .graph import all_labeled_trees

    for tree in all_labeled_trees(n):
        for root in range(n):
            par = [-1] * n
            anc = [0] * n
            stack = [root]
            while stack:
                v = stack.pop()
                for w in tree.neighbors(v):
                    if w != root and par[w] < 0 and w != par[v]:
                        par[w] = v
                        anc[w] = anc[v] | (1 << v)
                        stack.append(w)
            yield root, par, anc


def _brute_lift_set(g: Graph, dec: PrincipalDecomposition) -> set:
    """Minimal rooted trees on all vertices satisfying the lift conditions, by enumeration."""
    po = principal_orientation(g, dec).pairs()
    pi2 = mask_of(dec.pi2)
    sat = []
    for root, par, anc in _rooted_ancestor_masks(g.n):
        if any(not anc[b] >> a & 1 for a, b in po):
            continue
        if any(anc[b] & pi2 for b in dec.pi2):
            continue
        sat.append((root, tuple(par), tuple(anc)))

    def below(x, y):  # relations of x strictly inside relations of y
        return x != y and all(a & ~b == 0 for a, b in zip(x, y))

    out = set()
    for root, par, anc in sat:
        if not any(below(other[2], anc) for other in sat):
            pairs = tuple((v, p) for v, p in enumerate(par) if v != root)
            out.add(RootedTree(frozenset(range(g.n)), pairs, root))
    return out


def verify_block_characterizations(
    g: Graph,
    dec: PrincipalDecomposition,
    bijection_limit: int = 8,
    exhaustive_minimality: bool = False,
    report: BlockReport | None = None,
) -> Verification:
    """Check the rooted-tree characterisations of classes and lifts.

    For classes: rooted tree on pi1, every ``Nbd(beta)`` a chain, minimal.
    For lifts: rooted tree, contains the principal orientation, pi2 pairwise
    incomparable, minimal, size equality per vertex.  When the graph has at
    most ``bijection_limit`` vertices, every rooted tree on the vertex set is
    enumerated and the minimal ones satisfying the lift conditions must be
    exactly the lifts.
    """
    _require_tree(g)
    fails: list[str] = []
    if g.n == 1:
        return Verification("block_characterizations", True, {"classes": 0, "degenerate": True})
    if report is None:
        report = block_decomposition(g, dec)
    nbd_chain = _cond_nbd_chain(g, dec)
    lift_ok = _cond_lift(g, dec)
    for i, blk in enumerate(report.blocks):
        cls = blk.cls
        if not nbd_chain(cls.hasse):
            fails.append(f"class {i}: some Nbd(beta) is not totally ordered")
        if not is_minimal_rooted_tree(cls.hasse, nbd_chain, exhaustive_minimality):
            fails.append(f"class {i}: not minimal among rooted trees with chain neighbourhoods")
        t = blk.lifted
        if set(t.vertices) != set(range(g.n)):
            fails.append(f"lift {i}: not spanning")
        if not lift_ok(t):
            fails.append(f"lift {i}: violates containment of principal orientation or pi2 disorder")
        if not is_minimal_rooted_tree(t, lift_ok, exhaustive_minimality):
            fails.append(f"lift {i}: not minimal")
        sizes = t.subtree_sizes()
        if any(sizes[v] != len(c) for v, c in cls.components.items()) or any(sizes[b] != 1 for b in dec.pi2):
            fails.append(f"lift {i}: subtree sizes differ from class component sizes")
        comps = list(cls.components.values())
        for a, b in itertools.combinations(comps, 2):
            if a & b and not (a <= b or b <= a):
                fails.append(f"class {i}: components neither nested nor disjoint")
                break
    details = {"classes": len(report.blocks)}
    if g.n <= bijection_limit:
        lifts = {b.lifted for b in report.blocks}
        minimal = _brute_lift_set(g, dec)
        details["bijection_rhs"] = len(minimal)
        if minimal != lifts:
            fails.append(f"bijection: {len(lifts)} lifts vs {len(minimal)} minimal rooted trees")
        if len(lifts) != len(report.blocks):
            fails.append("bijection: lifting is not injective")
    return Verification("block_characterizations", not fails, details, tuple(fails))
