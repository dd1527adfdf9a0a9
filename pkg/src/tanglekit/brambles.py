"""Touching families of connected subgraphs and their hitting sets."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Sequence

from .bits import items_of, iter_bits, mask_of, popcount
from .errors import BudgetExceeded, FalsificationError, PreconditionError
from .graph import Graph
from .separations import DEFAULT_BUDGET
from .tangles import GraphTangle, _small_separations, big_component, check_graph_tangle


@dataclass(frozen=True)
class Subgraph:
    vertices: int
    edges: int

    @classmethod
    def induced(cls, g: Graph, vertices: Iterable[int]) -> "Subgraph":
        vm = mask_of(vertices)
        return cls(vm, g.edges_within(vm))

    def describe(self) -> dict:
        return {"vertices": items_of(self.vertices), "edges": items_of(self.edges)}


@dataclass(frozen=True)
class SubgraphFamily:
    members: tuple[Subgraph, ...]

    def validate(self, g: Graph) -> None:
        for c in self.members:
            if not c.vertices:
                raise PreconditionError("family members must be nonempty")
            if c.vertices & ~g.all_vertices or c.edges & ~g.all_edges:
                raise PreconditionError("family member is not inside the host graph")
            if g.endpoints(c.edges) & ~c.vertices:
                raise PreconditionError("member edge has an endpoint outside the member")
            if not _connected(g, c):
                raise PreconditionError(f"member {items_of(c.vertices)} is not connected")

    def __len__(self):
        return len(self.members)


def _connected(g: Graph, c: Subgraph) -> bool:
    # connectivity using only the member's own edges
    start = c.vertices & -c.vertices
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for b in iter_bits(frontier):
            nxt |= g.incident[b.bit_length()] & c.edges
        reach = g.endpoints(nxt) & ~seen
        seen |= reach
        frontier = reach
    return seen == c.vertices


def _touching_edges(g: Graph, c: Subgraph) -> int:
    return g.edges_touching(c.vertices)


def touch(g: Graph, members: Sequence[Subgraph]) -> bool:
    """Common vertex, or an edge of ``G`` with an endpoint in every member."""
    v = g.all_vertices
    e = g.all_edges
    for c in members:
        v &= c.vertices
        e &= _touching_edges(g, c)
    return bool(v or e)


def touches(g: Graph, members: Sequence[Subgraph], mode: str = "pairwise") -> bool:
    """Pairwise or triplewise touching.

    Tuples may repeat a member, so triplewise touching implies pairwise
    touching and a single empty member never touches.
    """
    size = {"pairwise": 2, "triplewise": 3}.get(mode)
    if size is None:
        raise PreconditionError(f"mode must be pairwise or triplewise, got {mode!r}")
    return all(touch(g, combo) for combo in combinations_with_replacement(members, size))


def min_hitting_set(g: Graph, family: SubgraphFamily, budget: int = DEFAULT_BUDGET) -> int:
    """Exact size of a smallest vertex set meeting every member (branch and bound)."""
    if not family.members:
        raise PreconditionError("family must be nonempty")
    sets = sorted({c.vertices for c in family.members}, key=popcount)
    # drop supersets: hitting the smaller set hits them too
    sets = [s for s in sets if not any(o != s and o & ~s == 0 for o in sets)]
    best = len(sets)
    nodes = 0

    def rec(hit: int, chosen: int):
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"hitting-set search exceeded {budget} nodes")
        open_sets = [s for s in sets if not s & hit]
        if not open_sets:
            best = min(best, chosen)
            return
        # disjoint open sets each need their own vertex
        lower, used = 0, 0
        for s in open_sets:
            if not s & used:
                lower += 1
                used |= s
        if chosen + lower >= best:
            return
        pick = min(open_sets, key=popcount)
        for b in iter_bits(pick):
            rec(hit | b, chosen + 1)

    rec(0, 0)
    return best


def reed_family_from_tangle(g: Graph, t: GraphTangle, budget: int = DEFAULT_BUDGET) -> SubgraphFamily:
    """Big components ``C(T, S)`` over every ``|S| < ord(T)``, deduplicated.

    Asserts the family touches triplewise and cannot be hit by fewer than
    ``ord(T)`` vertices.
    """
    seen = {}
    for size in range(t.order):
        for s in combinations(g.vertices, size):
            comp = mask_of(big_component(g, t, s, budget))
            seen.setdefault(comp, Subgraph(comp, g.edges_within(comp)))
    fam = SubgraphFamily(tuple(seen[c] for c in sorted(seen)))
    if not touches(g, fam.members, "triplewise"):
        raise FalsificationError("big components do not touch triplewise", witness=fam)
    if min_hitting_set(g, fam, budget) < t.order:
        raise FalsificationError("big components have a small hitting set", witness=fam)
    return fam


def tangle_from_family(g: Graph, family: SubgraphFamily, k: int, budget: int = DEFAULT_BUDGET) -> GraphTangle:
    """Separations of order ``< k`` with some member inside ``B - V(A)``."""
    family.validate(g)
    if not touches(g, family.members, "triplewise"):
        raise PreconditionError("family does not touch triplewise")
    h = min_hitting_set(g, family, budget)
    if h < k:
        raise PreconditionError(f"family has a hitting set of size {h} < {k}")
    members = frozenset(
        s for s in _small_separations(g, k, budget)
        if any(c.vertices & ~(s.verts_b & ~s.verts_a) == 0 and c.edges & ~s.edges_b == 0
               for c in family.members))
    t = GraphTangle(k, members)
    report = check_graph_tangle(g, t, budget)
    if not report.passed:
        raise FalsificationError("family construction violates the tangle axioms",
                                 witness=report.violations)
    return t
