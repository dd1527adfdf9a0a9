"""Branch decompositions, exact branch-width, treewidth and the two checks relating them."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numba import njit

from .bits import items_of, popcount
from .connectivity import ConnectivitySystem, make_system
from .errors import BudgetExceeded, PreconditionError
from .graph import Graph
from .kappa import kappa_table, max_tangle_order
from .separations import DEFAULT_BUDGET

MAX_DP_UNIVERSE = 16
MAX_TW_VERTICES = 15


@dataclass(frozen=True)
class CubicTree:
    """Tree on nodes ``0..nodes-1``; internal nodes have degree exactly 3."""

    nodes: int
    edges: tuple[tuple[int, int], ...]

    def neighbours(self) -> list[list[int]]:
        nb = [[] for _ in range(self.nodes)]
        for a, b in self.edges:
            nb[a].append(b)
            nb[b].append(a)
        return nb

    @property
    def leaves(self) -> tuple[int, ...]:
        if self.nodes == 1:
            return (0,)
        return tuple(i for i, nb in enumerate(self.neighbours()) if len(nb) == 1)

    def validate(self) -> None:
        if self.nodes == 0:
            if self.edges:
                raise PreconditionError("empty tree with edges")
            return
        if len(self.edges) != self.nodes - 1:
            raise PreconditionError("a tree on n nodes has n-1 edges")
        nb = self.neighbours()
        seen, stack = {0}, [0]
        while stack:
            for w in nb[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != self.nodes:
            raise PreconditionError("tree is not connected")
        bad = [i for i, x in enumerate(nb) if len(x) not in (0, 1, 3)]
        if bad:
            raise PreconditionError(f"node {bad[0]} has degree {len(nb[bad[0]])}")


@dataclass(frozen=True)
class BranchDecomposition:
    tree: CubicTree
    leaf_map: dict[int, int]  # leaf node -> universe element (1-based)

    def validate(self, size: int) -> None:
        self.tree.validate()
        if sorted(self.leaf_map) != sorted(self.tree.leaves) and self.tree.nodes:
            raise PreconditionError("leaf map must cover exactly the leaves")
        if sorted(self.leaf_map.values()) != list(range(1, size + 1)):
            raise PreconditionError("leaf map is not a bijection onto the universe")

    def side(self, s: int, t: int) -> int:
        """Elements at leaves on ``t``'s side of the tree edge ``st``."""
        nb = self.tree.neighbours()
        seen, stack, out = {s, t}, [t], 0
        while stack:
            u = stack.pop()
            if u in self.leaf_map:
                out |= 1 << (self.leaf_map[u] - 1)
            for w in nb[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return out

    def oriented_sides(self) -> list[tuple[int, int, int]]:
        out = []
        for a, b in self.tree.edges:
            out.append((a, b, self.side(a, b)))
            out.append((b, a, self.side(b, a)))
        return out


def width(sys: ConnectivitySystem, d: BranchDecomposition) -> int:
    """Largest ``kappa`` over the oriented tree edges; 0 without edges."""
    d.validate(sys.size)
    return max((sys.kappa(x) for _, _, x in d.oriented_sides()), default=0)


def edge_widths(sys: ConnectivitySystem, d: BranchDecomposition) -> list[tuple[int, int, int]]:
    return [(a, b, sys.kappa(x)) for a, b, x in d.oriented_sides()]


def decomposition_from_nested(nested) -> BranchDecomposition:
    """Build a decomposition from nested tuples of elements.

    The outer tuple is the root node (two or three children); inner tuples
    are binary nodes and integers are leaves.
    """
    edges: list[tuple[int, int]] = []
    leaf_map: dict[int, int] = {}
    count = 0

    def build(item) -> int:
        nonlocal count
        me = count
        count += 1
        if isinstance(item, int):
            leaf_map[me] = item
            return me
        for child in item:
            edges.append((me, build(child)))
        return me

    if isinstance(nested, tuple) and len(nested) == 2:
        # a root with two children is just the edge between them
        a = build(nested[0])
        b = build(nested[1])
        edges.append((a, b))
    else:
        build(nested)
    return BranchDecomposition(CubicTree(count, tuple(edges)), leaf_map)


def fig4_decomposition() -> BranchDecomposition:
    """The width-2 decomposition of the bridged example graph, drawn as a rooted tree."""
    from .generators import fig3_edge as e
    return decomposition_from_nested((
        (e("e1"), ((e("e2"), e("e3")), e("e4"))),
        e("e8"),
        (e("e10"), (e("e9"), ((e("e5"), e("e6")), e("e7")))),
    ))


# ----------------------------------------------------------------------------
# exact branch-width


@njit(cache=True)
def _subset_dp(kap, n):
    size = 1 << n
    f = np.zeros(size, dtype=np.int64)
    arg = np.zeros(size, dtype=np.int64)
    for x in range(1, size):
        if x & (x - 1) == 0:
            f[x] = kap[x]
            continue
        low = x & -x
        rest = x ^ low
        best = 1 << 40
        choice = 0
        s = rest
        while True:
            s = (s - 1) & rest
            a = f[low | s]
            b = f[rest ^ s]
            v = a if a > b else b
            if v < best:
                best = v
                choice = low | s
                if best <= kap[x]:
                    break
            if s == 0:
                break
        f[x] = best if best > kap[x] else kap[x]
        arg[x] = choice
    return f, arg


def _dp(sys: ConnectivitySystem, budget: int):
    n = sys.size
    if n > MAX_DP_UNIVERSE or 3 ** n > budget * 10:
        raise BudgetExceeded(f"subset DP over {n} elements is beyond budget")
    return _subset_dp(kappa_table(sys, budget), n)


def branch_width(sys: ConnectivitySystem, budget: int = DEFAULT_BUDGET) -> tuple[int, BranchDecomposition]:
    """Exact branch-width with a decomposition attaining it."""
    n = sys.size
    if n == 0:
        return 0, BranchDecomposition(CubicTree(0, ()), {})
    if n == 1:
        return 0, BranchDecomposition(CubicTree(1, ()), {0: 1})
    f, arg = _dp(sys, budget)
    full = sys.full
    best, root = None, None
    rest = full ^ 1
    s = rest
    while True:
        s = (s - 1) & rest
        y = 1 | s
        v = max(int(f[y]), int(f[full ^ y]))
        if best is None or v < best:
            best, root = v, y
        if s == 0:
            break

    def nested(x):
        if popcount(x) == 1:
            return items_of(x)[0]
        a = int(arg[x])
        return (nested(a), nested(x ^ a))

    d = decomposition_from_nested((nested(root), nested(full ^ root)))
    w = width(sys, d)
    if w != best:
        raise AssertionError(f"rebuilt decomposition has width {w}, table says {best}")
    return best, d


# ----------------------------------------------------------------------------
# treewidth


def treewidth(g: Graph) -> int:
    """Exact treewidth by DP over eliminated vertex sets.

    ``TW(S)`` is the best maximum back-degree for eliminating ``S`` first;
    eliminating ``v`` after ``S`` costs the number of vertices outside
    ``S + v`` reachable from ``v`` through ``S``.
    """
    n = g.n
    if n > MAX_TW_VERTICES:
        raise BudgetExceeded(f"treewidth DP is limited to {MAX_TW_VERTICES} vertices")
    if n == 0:
        return -1
    full = g.all_vertices
    tw = {0: -1}
    for size in range(1, n + 1):
        nxt = {}
        for s, val in tw.items():
            for b in range(n):
                bit = 1 << b
                if s & bit:
                    continue
                comp = g.reach(bit, s | bit)
                q = popcount(g.neighbourhood(comp) & ~(s | bit))
                cand = max(val, q)
                t = s | bit
                if cand < nxt.get(t, n + 1):
                    nxt[t] = cand
        tw = nxt
    return tw[full]


# ----------------------------------------------------------------------------
# reports


@dataclass
class DualityReport:
    branch_width: int
    max_tangle_order: int
    decomposition: BranchDecomposition = field(repr=False)

    @property
    def holds(self) -> bool:
        return self.branch_width == self.max_tangle_order

    def __bool__(self):
        return self.holds


def verify_duality(sys: ConnectivitySystem, budget: int = DEFAULT_BUDGET) -> DualityReport:
    """Branch-width and maximum tangle order from the two independent engines."""
    bw, d = branch_width(sys, budget)
    return DualityReport(bw, max_tangle_order(sys, budget), d)


@dataclass
class InequalityReport:
    branch_width: int
    treewidth: int

    @property
    def left(self) -> bool:
        return self.branch_width <= self.treewidth + 1

    @property
    def right(self) -> bool:
        # tw + 1 <= max(3/2 bw, 2), kept in integers
        return 2 * (self.treewidth + 1) <= max(3 * self.branch_width, 4)

    @property
    def left_tight(self) -> bool:
        return self.branch_width == self.treewidth + 1

    @property
    def right_tight(self) -> bool:
        return 2 * (self.treewidth + 1) == max(3 * self.branch_width, 4)

    @property
    def holds(self) -> bool:
        return self.left and self.right

    def __bool__(self):
        return self.holds


def verify_inequalities(g: Graph, budget: int = DEFAULT_BUDGET) -> InequalityReport:
    bw, _ = branch_width(make_system("vertex-conn", g), budget)
    return InequalityReport(bw, treewidth(g))
