"""Tangles of connectivity systems and their translation to graph tangles."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import NamedTuple

import numpy as np

from .bits import items_of, popcount
from .connectivity import ConnectivitySystem, make_system
from .errors import BudgetExceeded, FalsificationError, PreconditionError
from .graph import Graph
from .separations import DEFAULT_BUDGET
from .tangles import GraphTangle, _small_separations, check_graph_tangle

KAPPA_AXIOMS = ("T0", "T1", "T2", "T3")
MAX_UNIVERSE = 20


@dataclass(frozen=True)
class KappaTangle:
    order: int
    members: frozenset[int]

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    def sorted_members(self) -> list[int]:
        return sorted(self.members, key=lambda x: (popcount(x), items_of(x)))


class KappaViolation(NamedTuple):
    axiom: str
    witnesses: tuple[int, ...]


@dataclass
class KappaReport:
    violations: list[KappaViolation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def violated(self, axiom: str) -> bool:
        return any(v.axiom == axiom for v in self.violations)

    def witness(self, axiom: str) -> tuple[int, ...] | None:
        for v in self.violations:
            if v.axiom == axiom:
                return v.witnesses
        return None

    def __bool__(self):
        return self.passed


def kappa_table(sys: ConnectivitySystem, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """``kappa`` of every subset, cached on the system."""
    tab = getattr(sys, "_table", None)
    if tab is None:
        if sys.size > MAX_UNIVERSE or (1 << sys.size) > budget:
            raise BudgetExceeded(f"universe of {sys.size} elements is beyond the subset budget")
        tab = np.fromiter((sys.kappa(x) for x in range(1 << sys.size)),
                          dtype=np.int64, count=1 << sys.size)
        sys._table = tab
    return tab


def small_sets(sys: ConnectivitySystem, k: int, budget: int = DEFAULT_BUDGET) -> list[int]:
    """All ``X`` with ``kappa(X) < k`` in increasing bitmask order."""
    return [int(x) for x in np.nonzero(kappa_table(sys, budget) < k)[0]]


def _minimal(sets) -> list[int]:
    out = []
    for x in sorted(set(sets), key=popcount):
        if not any(m & ~x == 0 for m in out):
            out.append(x)
    return out


def check_kappa_tangle(sys: ConnectivitySystem, t: KappaTangle, budget: int = DEFAULT_BUDGET) -> KappaReport:
    """Check ``T0``-``T3``; ``T2`` runs over the inclusion-minimal members."""
    full = sys.full
    if any(x < 0 or x & ~full for x in t.members):
        raise PreconditionError("member outside the universe")
    rep = KappaReport()
    for x in t.sorted_members():
        if sys.kappa(x) >= t.order:
            rep.violations.append(KappaViolation("T0", (x,)))
            break
    for x in small_sets(sys, t.order, budget):
        if x not in t.members and full ^ x not in t.members:
            rep.violations.append(KappaViolation("T1", (x,)))
            break
    for trip in combinations_with_replacement(_minimal(t.members), 3):
        if not trip[0] & trip[1] & trip[2]:
            rep.violations.append(KappaViolation("T2", trip))
            break
    for x in t.sorted_members():
        if popcount(x) == 1:
            rep.violations.append(KappaViolation("T3", (x,)))
            break
    return rep


# ----------------------------------------------------------------------------
# enumeration


class _SearchState:
    """Partial tangle during the extension search.

    ``up[y]`` says ``y`` contains a member; ``hit[y]`` says ``y`` contains
    a pairwise intersection of members (a member with itself included), so
    a new member must avoid complements ``y`` with ``hit[y]`` set.
    """

    __slots__ = ("mins", "up", "hit")

    def __init__(self, mins, up, hit):
        self.mins = mins
        self.up = up
        self.hit = hit

    def add(self, x: int, idx: np.ndarray, full: int) -> "_SearchState | None":
        if self.up[x]:
            return self
        if not x or self.hit[full ^ x]:
            return None
        up = self.up | ((idx & x) == x)
        hit = self.hit.copy()
        for p in [x] + [x & m for m in self.mins]:
            if not hit[p]:
                hit |= (idx & p) == p
        mins = tuple(m for m in self.mins if m & ~x) + (x,)
        return _SearchState(mins, up, hit)


def _extensions(sys: ConnectivitySystem, base: KappaTangle, budget: int):
    """Tangles of order ``base.order + 1`` truncating to ``base``."""
    k = base.order + 1
    full = sys.full
    tab = kappa_table(sys, budget)
    idx = np.arange(1 << sys.size)
    level = [int(x) for x in np.nonzero(tab == k - 1)[0]]
    pairs = sorted({min(x, full ^ x) for x in level}, key=lambda x: (popcount(x), x))
    if len(pairs) > budget:
        raise BudgetExceeded(f"{len(pairs)} undecided pairs exceed the budget")
    blank = np.zeros(1 << sys.size, dtype=bool)
    state = _SearchState((), blank, blank)
    for x in _minimal(base.members):
        state = state.add(x, idx, full)
        if state is None:
            return
    nodes = 0

    def options(x, st):
        out = []
        for side in (x, full ^ x):
            if popcount(side) == 1:
                continue
            if st.up[side]:
                return [side]  # the other side would miss a member
            out.append(side)
        return out

    def rec(i, chosen, st):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded("tangle search exceeded its node budget")
        while i < len(pairs):
            opts = options(pairs[i], st)
            if len(opts) != 1:
                break
            st = st.add(opts[0], idx, full)
            if st is None:
                return
            chosen = chosen + (opts[0],)
            i += 1
        if i == len(pairs):
            yield chosen
            return
        for side in options(pairs[i], st):
            nxt = st.add(side, idx, full)
            if nxt is not None:
                yield from rec(i + 1, chosen + (side,), nxt)

    for chosen in rec(0, (), state):
        yield KappaTangle(k, base.members | frozenset(chosen))


def _levels(sys: ConnectivitySystem, budget: int):
    """Yield the lists of tangles of order 0, 1, 2, ... until one is empty."""
    current = [KappaTangle(0, frozenset())]
    yield current
    while current:
        current = [t2 for t in current for t2 in _extensions(sys, t, budget)]
        yield current


def enumerate_kappa_tangles(sys: ConnectivitySystem, k: int, budget: int = DEFAULT_BUDGET) -> list[KappaTangle]:
    """All tangles of order exactly ``k``; the empty family is the order-0 tangle."""
    if k < 0:
        raise PreconditionError("order must be nonnegative")
    for order, tangles in enumerate(_levels(sys, budget)):
        if order == k or not tangles:
            return sorted(tangles, key=lambda t: [items_of(x) for x in t.sorted_members()]) if order == k else []
    return []


def max_tangle_order(sys: ConnectivitySystem, budget: int = DEFAULT_BUDGET) -> int:
    best = 0
    for order, tangles in enumerate(_levels(sys, budget)):
        if not tangles:
            break
        best = order
    return best


def truncate_kappa(t: KappaTangle, sys: ConnectivitySystem, k2: int) -> KappaTangle:
    if not 0 <= k2 <= t.order:
        raise PreconditionError(f"cannot truncate order {t.order} to {k2}")
    return KappaTangle(k2, frozenset(x for x in t.members if sys.kappa(x) < k2))


# ----------------------------------------------------------------------------
# translation between the two kinds of tangle


@dataclass(frozen=True)
class ExceptionalCase:
    """A graph tangle that has no counterpart among edge-set tangles.

    ``tag`` is ``isolated-vertex``, ``isolated-edge`` or
    ``pendant-or-isolated-edge``; ``witness`` is the vertex or edge id.
    """

    tag: str
    witness: int


def _vertex_system(g: Graph) -> ConnectivitySystem:
    return make_system("vertex-conn", g)


def kappa_to_g(g: Graph, t: KappaTangle, budget: int = DEFAULT_BUDGET) -> GraphTangle:
    """Separations of order ``< k`` whose ``B`` edge set is a member."""
    if any(x & ~g.all_edges for x in t.members):
        raise PreconditionError("members must be edge sets of the graph")
    members = frozenset(s for s in _small_separations(g, t.order, budget) if s.edges_b in t.members)
    out = GraphTangle(t.order, members)
    report = check_graph_tangle(g, out, budget)
    if not report.passed:
        raise FalsificationError("translated family is not a graph tangle", witness=report.violations)
    return out


def exceptional_case(g: Graph, s: GraphTangle, budget: int = DEFAULT_BUDGET) -> ExceptionalCase | None:
    """Match ``s`` against the three structural exceptions by member-set equality."""
    k = s.order
    if k not in (1, 2):
        return None
    seps = _small_separations(g, k, budget)
    if k == 1:
        for v in g.vertices:
            if g.degree(v) == 0:
                bit = 1 << (v - 1)
                fam = frozenset(x for x in seps if x.verts_b & ~x.verts_a & bit)
                if fam == s.members:
                    return ExceptionalCase("isolated-vertex", v)
    for e, (u, w) in enumerate(g.edges, start=1):
        du, dw = g.degree(u), g.degree(w)
        isolated = du == 1 and dw == 1
        pendant = not isolated and (du == 1 or dw == 1)
        if k == 1 and not isolated or k == 2 and not (isolated or pendant):
            continue
        bit = 1 << (e - 1)
        fam = frozenset(x for x in seps if x.edges_b & bit)
        if fam == s.members:
            return ExceptionalCase("isolated-edge" if k == 1 else "pendant-or-isolated-edge", e)
    return None


def g_to_kappa(g: Graph, s: GraphTangle, budget: int = DEFAULT_BUDGET) -> KappaTangle | ExceptionalCase:
    """``{E(B)}`` over the members of ``s``, or the exception that blocks it."""
    case = exceptional_case(g, s, budget)
    if case is not None:
        return case
    t = KappaTangle(s.order, frozenset(x.edges_b for x in s.members))
    report = check_kappa_tangle(_vertex_system(g), t, budget)
    if not report.passed:
        raise FalsificationError("translated family is not an edge-set tangle", witness=report.violations)
    return t
