"""Separations, vertex cuts, k-blocks, torsos and connectivity predicates."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .bits import items_of, iter_bits, mask_of, popcount
from .errors import BudgetExceeded, FalsificationError, PreconditionError
from .graph import Graph

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True, slots=True)
class Separation:
    """A separation ``(A, B)`` stored as four bitmasks.

    Identity is the triple ``(edges_a, verts_a, verts_b)``; ``edges_b`` is
    the complement of ``edges_a`` and is carried along for convenience.
    """

    edges_a: int
    edges_b: int = field(compare=False)
    verts_a: int
    verts_b: int

    @property
    def separator(self) -> int:
        return self.verts_a & self.verts_b

    @property
    def order(self) -> int:
        return popcount(self.verts_a & self.verts_b)

    @property
    def is_proper(self) -> bool:
        return bool(self.verts_a & ~self.verts_b) and bool(self.verts_b & ~self.verts_a)

    def reversed(self) -> "Separation":
        return Separation(self.edges_b, self.edges_a, self.verts_b, self.verts_a)

    def sort_key(self):
        return (self.order, self.verts_a, self.verts_b, self.edges_a)

    def a_covers(self, other: "Separation") -> bool:
        """True if ``A`` contains ``other.A`` as a subgraph."""
        return (other.verts_a & ~self.verts_a) == 0 and (other.edges_a & ~self.edges_a) == 0

    def join(self, other: "Separation") -> "Separation":
        """The separation ``(A u A', B n B')``."""
        return Separation(self.edges_a | other.edges_a, self.edges_b & other.edges_b,
                          self.verts_a | other.verts_a, self.verts_b & other.verts_b)

    def validate(self, g: Graph) -> None:
        problems = []
        if self.edges_a & self.edges_b:
            problems.append("edge sides overlap")
        if self.edges_a | self.edges_b != g.all_edges:
            problems.append("edge sides do not cover E(G)")
        if (self.verts_a | self.verts_b) != g.all_vertices:
            problems.append("vertex sides do not cover V(G)")
        if g.endpoints(self.edges_a) & ~self.verts_a:
            problems.append("A misses an endpoint of one of its edges")
        if g.endpoints(self.edges_b) & ~self.verts_b:
            problems.append("B misses an endpoint of one of its edges")
        if problems:
            raise PreconditionError(f"not a separation: {'; '.join(problems)}")

    def describe(self) -> dict:
        return {
            "order": self.order,
            "separator": items_of(self.separator),
            "verts_a": items_of(self.verts_a),
            "verts_b": items_of(self.verts_b),
            "edges_a": items_of(self.edges_a),
            "edges_b": items_of(self.edges_b),
        }


def make_separation(g: Graph, edges_a: int, verts_a: int, verts_b: int) -> Separation:
    sep = Separation(edges_a, g.all_edges & ~edges_a, verts_a, verts_b)
    sep.validate(g)
    return sep


def component_separation(g: Graph, separator: int, comp: int) -> Separation:
    """``(A, B)`` with ``B`` = the component ``comp`` of ``G - separator`` plus the separator.

    ``B`` gets every edge touching ``comp``; everything else goes to ``A``.
    """
    eb = g.edges_touching(comp)
    return Separation(g.all_edges & ~eb, eb, g.all_vertices & ~comp, comp | separator)


# ----------------------------------------------------------------------------
# enumeration


def _endpoint_table(g: Graph) -> list[int]:
    size = 1 << g.m
    table = [0] * size
    ends = g.ends
    for x in range(1, size):
        low = x & -x
        table[x] = table[x ^ low] | ends[low.bit_length() - 1]
    return table


def enumerate_separations(g: Graph, max_order: int, budget: int = DEFAULT_BUDGET) -> list[Separation]:
    """Every separation of ``g`` of order at most ``max_order``.

    Each edge bipartition fixes the forced vertex sides; the remaining
    freedom is which extra vertices join the separator and on which side the
    isolated vertices sit.  Both orientations appear.  The output is sorted
    by :meth:`Separation.sort_key`.

    Raises :class:`BudgetExceeded` before starting if ``2**m`` alone is over
    ``budget``, and midway if the candidate count passes it.
    """
    if max_order < 0:
        raise PreconditionError("max_order must be nonnegative")
    return list(_enumerate_cached(g, max_order, budget))


@lru_cache(maxsize=64)
def _enumerate_cached(g: Graph, max_order: int, budget: int) -> tuple[Separation, ...]:
    if (1 << g.m) > budget:
        raise BudgetExceeded(f"2^{g.m} edge bipartitions exceed the budget of {budget}")
    table = _endpoint_table(g)
    all_e = g.all_edges
    isolated = g.all_vertices & ~table[all_e]
    out = []
    work = 0
    for ea in range(1 << g.m):
        eb = all_e ^ ea
        va0, vb0 = table[ea], table[eb]
        base = va0 & vb0
        spare = max_order - popcount(base)
        if spare < 0:
            continue
        free = (va0 ^ vb0) | isolated
        for extra in _subsets_upto(free, spare):
            loose = isolated & ~extra
            for ia in _all_submasks(loose):
                work += 1
                out.append(Separation(ea, eb, va0 | extra | ia, vb0 | extra | (loose ^ ia)))
            if work > budget:
                raise BudgetExceeded(f"more than {budget} separation candidates")
    out.sort(key=Separation.sort_key)
    return tuple(out)


def _subsets_upto(mask: int, size: int):
    bits = list(iter_bits(mask))
    for r in range(min(size, len(bits)) + 1):
        for combo in combinations(bits, r):
            yield sum(combo)


def _all_submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def separations_with_separator_in(g: Graph, max_order: int, allowed: int,
                                  budget: int = DEFAULT_BUDGET) -> list[Separation]:
    return [s for s in _enumerate_cached(g, max_order, budget) if s.separator & ~allowed == 0]


# ----------------------------------------------------------------------------
# Menger machinery


def min_vertex_cut(g: Graph, u: int, v: int) -> int:
    """Size of a smallest vertex set avoiding ``u, v`` that separates them.

    Unit-capacity max-flow on the split graph (each inner vertex becomes an
    arc of capacity 1).
    """
    if u == v:
        raise PreconditionError("u and v must differ")
    if g.has_edge(u, v):
        raise PreconditionError(f"{u} and {v} are adjacent; no vertex cut exists")
    return _max_flow_split(g, u, v)


def _max_flow_split(g: Graph, s: int, t: int) -> int:
    # node 2x is x_in, 2x+1 is x_out
    cap: dict[tuple[int, int], int] = {}
    out: dict[int, list[int]] = {}

    def arc(a, b, c):
        if (a, b) not in cap:
            out.setdefault(a, []).append(b)
            out.setdefault(b, []).append(a)
            cap.setdefault((b, a), 0)
        cap[(a, b)] = cap.get((a, b), 0) + c

    big = g.n + 1
    for x in g.vertices:
        arc(2 * x, 2 * x + 1, big if x in (s, t) else 1)
    for a, b in g.edges:
        arc(2 * a + 1, 2 * b, big)
        arc(2 * b + 1, 2 * a, big)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        prev = {source: None}
        queue = deque([source])
        while queue and sink not in prev:
            x = queue.popleft()
            for y in out.get(x, ()):
                if y not in prev and cap[(x, y)] > 0:
                    prev[y] = x
                    queue.append(y)
        if sink not in prev:
            return flow
        y = sink
        while prev[y] is not None:
            x = prev[y]
            cap[(x, y)] -= 1
            cap[(y, x)] += 1
            y = x
        flow += 1


def _pair_inseparable(g: Graph, u: int, v: int, k: int) -> bool:
    return g.has_edge(u, v) or min_vertex_cut(g, u, v) > k


def is_k_inseparable(g: Graph, x: Iterable[int], k: int) -> bool:
    """``|x| > k`` and no separation of order at most ``k`` splits ``x``.

    Decided pairwise: a splitting separation splits some nonadjacent pair,
    and a pair is split exactly when a vertex cut of size ``<= k`` exists.
    """
    xs = sorted(set(x))
    if any(not 1 <= v <= g.n for v in xs):
        raise PreconditionError("x must be a subset of V(g)")
    if len(xs) <= k:
        return False
    return all(_pair_inseparable(g, u, v, k) for u, v in combinations(xs, 2))


@dataclass(frozen=True)
class BlockSet:
    k: int
    members: tuple[frozenset[int], ...]

    @property
    def proper(self) -> tuple[frozenset[int], ...]:
        return tuple(m for m in self.members if len(m) > self.k + 1)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def _maximal_cliques(rel: list[int], universe: int):
    """Bron-Kerbosch with pivoting on bitmask adjacency ``rel`` (index = bit position)."""
    found = []

    def expand(r, p, x):
        if not p and not x:
            found.append(r)
            return
        pivot_pool = p | x
        pivot = max(iter_bits(pivot_pool), key=lambda b: popcount(p & rel[b.bit_length() - 1]))
        for b in iter_bits(p & ~rel[pivot.bit_length() - 1]):
            nb = rel[b.bit_length() - 1]
            expand(r | b, p & nb, x & nb)
            p &= ~b
            x |= b

    if universe:
        expand(0, universe, 0)
    return found


def k_blocks(g: Graph, k: int) -> BlockSet:
    """All inclusion-maximal ``k``-inseparable vertex sets.

    Maximal cliques of the pairwise inseparability relation, keeping those
    with more than ``k`` vertices.
    """
    return _k_blocks_cached(g, k)


@lru_cache(maxsize=256)
def _k_blocks_cached(g: Graph, k: int) -> BlockSet:
    rel = [0] * g.n
    for u, v in combinations(g.vertices, 2):
        if _pair_inseparable(g, u, v, k):
            rel[u - 1] |= 1 << (v - 1)
            rel[v - 1] |= 1 << (u - 1)
    cliques = [c for c in _maximal_cliques(rel, g.all_vertices) if popcount(c) > k]
    members = sorted((frozenset(items_of(c)) for c in cliques), key=sorted)
    return BlockSet(k, tuple(members))


# ----------------------------------------------------------------------------
# torsos


@dataclass(frozen=True)
class Torso:
    base_vertices: frozenset[int]
    real_edges: tuple[tuple[int, int], ...]
    virtual_edges: tuple[tuple[int, int], ...]
    #: one path per virtual edge, running through its component
    witness_paths: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def order(self) -> int:
        return len(self.base_vertices)

    @property
    def proper(self) -> bool:
        return self.order >= 4

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.real_edges + self.virtual_edges))

    def as_graph(self) -> tuple[Graph, list[int]]:
        """The torso relabelled to ``1..|X|`` plus the original labels."""
        labels = sorted(self.base_vertices)
        new = {v: i + 1 for i, v in enumerate(labels)}
        return Graph(len(labels), [(new[u], new[v]) for u, v in self.edges]), labels


def _path_through(g: Graph, comp: int, v: int, w: int) -> list[int]:
    # BFS from v to w whose inner vertices stay in comp
    prev = {v: None}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for b in iter_bits(g.adj[x]):
            y = b.bit_length()
            if y in prev:
                continue
            if y == w and x != v:
                prev[y] = x
                path = [w]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                return path[::-1]
            if comp >> (y - 1) & 1:
                prev[y] = x
                queue.append(y)
    raise FalsificationError(f"no {v}-{w} path through component {items_of(comp)}")


def torso(g: Graph, x: Iterable[int], max_attachments: int | None = None) -> Torso:
    """``G[x]`` plus a virtual edge for every pair of attachments of a component of ``G - x``.

    With ``max_attachments`` set, every component must attach to at most
    that many vertices of ``x`` (used for 2-blocks, where it is 2).
    """
    xm = mask_of(x)
    if xm & ~g.all_vertices:
        raise PreconditionError("x must be a subset of V(g)")
    real = tuple(e for e in g.edges if mask_of(e) & ~xm == 0)
    virtual: dict[tuple[int, int], list[int]] = {}
    for comp in g.components(g.all_vertices & ~xm):
        att = items_of(g.neighbourhood(comp))
        if max_attachments is not None and len(att) > max_attachments:
            raise FalsificationError(
                f"component {items_of(comp)} attaches to {att}, more than {max_attachments}",
                witness=(items_of(comp), att))
        for v, w in combinations(att, 2):
            if g.has_edge(v, w) or (v, w) in virtual:
                continue
            p = _path_through(g, comp, v, w)
            if p[0] != v or p[-1] != w or any(not comp >> (y - 1) & 1 for y in p[1:-1]):
                raise FalsificationError(f"bad witness path {p} for virtual edge {v}{w}")
            virtual[(v, w)] = p
    return Torso(frozenset(items_of(xm)), real, tuple(sorted(virtual)), dict(virtual))


def triconnected_components(g: Graph) -> list[Torso]:
    """Torsos of the 2-blocks; ``Torso.proper`` flags order at least 4."""
    return [torso(g, blk, max_attachments=2) for blk in k_blocks(g, 2)]


# ----------------------------------------------------------------------------
# connectivity predicates


def is_k_connected(g: Graph, k: int) -> bool:
    """``|G| > k`` and no proper separation of order below ``k``.

    A proper separation of order ``< k`` exists exactly when deleting some
    set of fewer than ``k`` vertices disconnects the rest, so separators are
    enumerated instead of whole separations.
    """
    if g.n <= k:
        return False
    for size in range(k):
        for sep in combinations(g.vertices, size):
            if len(g.components(g.all_vertices & ~mask_of(sep))) >= 2:
                return False
    return True


def has_proper_separation(g: Graph, max_order: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Reference check straight from the enumeration (small graphs only)."""
    return any(s.is_proper for s in _enumerate_cached(g, max_order, budget))


def _balanced_split(sizes: list[int]) -> bool:
    # can the components be grouped into two nonempty sides of at least 2 vertices each?
    total = sum(sizes)
    reachable = {0}
    for s in sizes[:-1]:
        reachable |= {r + s for r in reachable}
    # fixing the last component on side two keeps both sides nonempty
    return any(r >= 2 and total - r >= 2 for r in reachable if r > 0)


def is_quasi_4_connected(g: Graph) -> bool:
    """3-connected, and every order-3 separation leaves at most one vertex on some side."""
    if not is_k_connected(g, 3):
        return False
    for trip in combinations(g.vertices, 3):
        comps = g.components(g.all_vertices & ~mask_of(trip))
        if len(comps) >= 2 and _balanced_split([popcount(c) for c in comps]):
            return False
    return True
