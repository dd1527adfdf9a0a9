"""Tangles of graphs: axioms, enumeration and the order <= 3 correspondence."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Iterable, NamedTuple

from .bits import items_of, mask_of, popcount
from .errors import FalsificationError, PreconditionError
from .graph import Graph
from .separations import (
    DEFAULT_BUDGET,
    Separation,
    _enumerate_cached,
    is_k_inseparable,
    k_blocks,
)

AXIOMS = ("GT0", "GT1", "GT2", "GT3")


@dataclass(frozen=True)
class GraphTangle:
    """An orientation family of separations of order below ``order``.

    ``members`` holds the chosen ``(A, B)`` orientations; ``B`` is the big side.
    """

    order: int
    members: frozenset[Separation]

    def __contains__(self, sep: Separation) -> bool:
        return sep in self.members

    def __len__(self) -> int:
        return len(self.members)

    def sorted_members(self) -> list[Separation]:
        return sorted(self.members, key=Separation.sort_key)


class Violation(NamedTuple):
    axiom: str
    witnesses: tuple[Separation, ...]


@dataclass
class AxiomReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def violated(self, axiom: str) -> bool:
        return any(v.axiom == axiom for v in self.violations)

    def witness(self, axiom: str) -> tuple[Separation, ...] | None:
        for v in self.violations:
            if v.axiom == axiom:
                return v.witnesses
        return None

    def __bool__(self):
        return self.passed


def _small_separations(g: Graph, k: int, budget: int) -> tuple[Separation, ...]:
    if k <= 0:
        return ()
    return _enumerate_cached(g, k - 1, budget)


def covers_graph(g: Graph, seps: Iterable[Separation]) -> bool:
    """Do the ``A`` sides of ``seps`` together equal ``G``?"""
    v = e = 0
    for s in seps:
        v |= s.verts_a
        e |= s.edges_a
    return v == g.all_vertices and e == g.all_edges


def _a_maximal(members: Iterable[Separation]) -> list[Separation]:
    # one representative per A side, then drop those whose A is strictly inside another
    by_a = {}
    for s in sorted(members, key=Separation.sort_key):
        by_a.setdefault((s.verts_a, s.edges_a), s)
    reps = list(by_a.values())
    return [s for s in reps
            if not any(o is not s and o.a_covers(s) for o in reps)]


def confirm_violation(g: Graph, t: GraphTangle, v: Violation, budget: int = DEFAULT_BUDGET) -> bool:
    """Re-check a reported violation from its witnesses alone."""
    w = v.witnesses
    if v.axiom == "GT0":
        return w[0] in t.members and w[0].order >= t.order
    if v.axiom == "GT1":
        return w[0].order < t.order and w[0] not in t.members and w[0].reversed() not in t.members
    if v.axiom == "GT2":
        return all(s in t.members for s in w) and covers_graph(g, w)
    if v.axiom == "GT3":
        return w[0] in t.members and w[0].verts_a == g.all_vertices
    raise ValueError(f"unknown axiom {v.axiom}")


def check_graph_tangle(g: Graph, t: GraphTangle, budget: int = DEFAULT_BUDGET) -> AxiomReport:
    """Check the four tangle axioms, recording the first witness of each failure.

    ``GT1`` is checked against the full enumeration of separations of order
    below ``t.order``.  ``GT2`` only needs members whose ``A`` side is
    inclusion-maximal: a covering triple stays covering when each ``A``
    grows.
    """
    for s in t.members:
        s.validate(g)
    report = AxiomReport()
    for s in t.sorted_members():
        if s.order >= t.order:
            report.violations.append(Violation("GT0", (s,)))
            break
    for s in _small_separations(g, t.order, budget):
        if s not in t.members and s.reversed() not in t.members:
            report.violations.append(Violation("GT1", (s,)))
            break
    tops = _a_maximal(t.members)
    for trip in combinations_with_replacement(tops, 3):
        if covers_graph(g, trip):
            report.violations.append(Violation("GT2", trip))
            break
    for s in t.sorted_members():
        if s.verts_a == g.all_vertices:
            report.violations.append(Violation("GT3", (s,)))
            break
    return report


# ----------------------------------------------------------------------------
# constructions


def tangle_of_set(g: Graph, x: Iterable[int], k: int, budget: int = DEFAULT_BUDGET) -> GraphTangle:
    """Separations of order ``< k`` with ``x`` inside ``V(B)``; no hypotheses checked."""
    xm = mask_of(x)
    members = frozenset(s for s in _small_separations(g, k, budget) if xm & ~s.verts_b == 0)
    return GraphTangle(k, members)


def block_tangle(g: Graph, x: Iterable[int], k: int, budget: int = DEFAULT_BUDGET) -> GraphTangle:
    """The tangle induced by a ``(k-1)``-inseparable set with more than ``1.5 (k-1)`` vertices."""
    xs = sorted(set(x))
    if k < 1:
        raise PreconditionError("k must be at least 1")
    if not is_k_inseparable(g, xs, k - 1):
        raise PreconditionError(f"{xs} is not {k - 1}-inseparable")
    if 2 * len(xs) <= 3 * (k - 1):
        raise PreconditionError(f"|x| = {len(xs)} is not larger than 3/2 * {k - 1}")
    return tangle_of_set(g, xs, k, budget)


def _covering_triple(g: Graph, x: list[int]) -> tuple[Separation, ...]:
    xm = mask_of(x)
    comps = g.components(g.all_vertices & ~xm)
    out = []
    for xi, xj in combinations(x, 2):
        s = mask_of((xi, xj))
        y = 0
        for c in comps:
            if g.neighbourhood(c) & ~s == 0:
                y |= c
        z = g.all_vertices & ~(y | s)
        ea = g.edges_within(y | s)
        out.append(Separation(ea, g.all_edges & ~ea, y | s, s | z))
    return tuple(out)


def improper_2block_counterexample(g: Graph, x: Iterable[int], budget: int = DEFAULT_BUDGET) -> AxiomReport:
    """Show that a 2-block of size 3 does not induce an order-3 tangle.

    Returns the axiom report of ``T^(3)(x)`` whose ``GT2`` witness is the
    triple ``(A_12, B_12), (A_13, B_13), (A_23, B_23)`` built from the
    pairs of ``x`` and the components of ``G - x`` hanging off each pair.
    """
    xs = sorted(set(x))
    if len(xs) != 3 or frozenset(xs) not in set(k_blocks(g, 2)):
        raise PreconditionError(f"{xs} is not a 2-block of size 3")
    t = tangle_of_set(g, xs, 3, budget)
    triple = _covering_triple(g, xs)
    for s in triple:
        s.validate(g)
    if not all(s in t.members for s in triple) or not covers_graph(g, triple):
        raise FalsificationError("the pair-separations do not cover G", witness=triple)
    generic = check_graph_tangle(g, t, budget)
    if not generic.violated("GT2"):
        raise FalsificationError("generic checker found no GT2 violation", witness=triple)
    report = AxiomReport([Violation("GT2", triple)])
    report.violations += [v for v in generic.violations if v.axiom != "GT2"]
    return report


def example_tangle(g: Graph, kind: str, payload, k: int, budget: int = DEFAULT_BUDGET) -> GraphTangle:
    """Tangles from a cycle, a clique or a ``k x k`` grid inside ``g``.

    ``payload`` is the cyclic vertex sequence, the clique's vertex set, or
    the list of grid rows (columns are read off by position).
    """
    seps = _small_separations(g, k, budget)
    if kind == "cycle":
        cyc = list(payload)
        if k != 2:
            raise PreconditionError("cycle tangles have order 2")
        if len(cyc) < 3 or len(set(cyc)) != len(cyc):
            raise PreconditionError("a cycle needs at least 3 distinct vertices")
        pairs = list(zip(cyc, cyc[1:] + cyc[:1]))
        vm, em = mask_of(cyc), g.edge_mask(pairs)
        members = frozenset(s for s in seps if vm & ~s.verts_b == 0 and em & ~s.edges_b == 0)
    elif kind == "clique":
        xs = sorted(set(payload))
        if any(not g.has_edge(u, v) for u, v in combinations(xs, 2)):
            raise PreconditionError(f"{xs} is not a clique")
        if not 3 * (k - 1) < 2 * len(xs):
            raise PreconditionError(f"k = {k} is not below 2/3 * {len(xs)} + 1")
        xm = mask_of(xs)
        members = frozenset(s for s in seps if xm & ~s.verts_b == 0)
    elif kind == "grid":
        rows = [list(r) for r in payload]
        if len(rows) != k or any(len(r) != k for r in rows):
            raise PreconditionError(f"grid payload must be {k} rows of length {k}")
        row_edges = [g.edge_mask(zip(r, r[1:])) for r in rows]
        for a, b in zip(rows, rows[1:]):
            g.edge_mask(zip(a, b))
        row_vs = [mask_of(r) for r in rows]
        members = frozenset(
            s for s in seps
            if any(rv & ~s.verts_b == 0 and re & ~s.edges_b == 0 for rv, re in zip(row_vs, row_edges)))
    else:
        raise PreconditionError(f"unknown example kind {kind!r}")
    t = GraphTangle(k, members)
    report = check_graph_tangle(g, t, budget)
    if not report.passed:
        raise FalsificationError(f"{kind} construction is not a tangle", witness=report.violations)
    return t


# ----------------------------------------------------------------------------
# enumeration


def _touch3(a, b, c) -> bool:
    # a, b, c are (vertex mask, touching-edge mask) pairs
    return bool(a[0] & b[0] & c[0]) or bool(a[1] & b[1] & c[1])


def _separators(g: Graph, k: int) -> list[int]:
    out = []
    for size in range(k):
        out.extend(mask_of(c) for c in combinations(g.vertices, size))
    return out


def _choice_functions(g: Graph, k: int):
    """Yield maps ``S -> C(S)`` that make a tangle of order ``k``.

    Every tangle picks, for each ``|S| < k``, one component of ``G - S`` on
    its big side, and the picks touch triplewise; conversely such a pick
    defines a tangle.  Picks are made by separator size, restricted to
    components inside the picks for all ``S - v``.
    """
    seps = _separators(g, k)
    comps = {}
    for s in seps:
        cs = g.components(g.all_vertices & ~s)
        if not cs:
            return
        comps[s] = [(c, g.edges_touching(c)) for c in cs]
    chosen: dict[int, tuple[int, int]] = {}
    pairs: list[tuple[int, int]] = []

    def rec(i):
        if i == len(seps):
            yield {s: c[0] for s, c in chosen.items()}
            return
        s = seps[i]
        bound = g.all_vertices
        for b in items_of(s):
            bound &= chosen[s & ~(1 << (b - 1))][0]
        for cand in comps[s]:
            if cand[0] & ~bound:
                continue
            if not all(cand[0] & p[0] or cand[1] & p[1] for p in pairs):
                continue
            added = [(cand[0] & c[0], cand[1] & c[1]) for c in chosen.values()]
            added.append(cand)
            if not all(_touch3(cand, cand, c) for c in chosen.values()):
                continue
            chosen[s] = cand
            pairs.extend(added)
            yield from rec(i + 1)
            del pairs[len(pairs) - len(added):]
            del chosen[s]

    yield from rec(0)


def tangle_from_choice(g: Graph, choice: dict[int, int], k: int, budget: int = DEFAULT_BUDGET) -> GraphTangle:
    members = frozenset(s for s in _small_separations(g, k, budget)
                        if choice[s.separator] & ~(s.verts_b & ~s.verts_a) == 0)
    return GraphTangle(k, members)


def enumerate_graph_tangles(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> list[GraphTangle]:
    """All tangles of order exactly ``k`` (``k >= 1``), in a fixed canonical order."""
    if k < 1:
        raise PreconditionError("graph tangles are enumerated for k >= 1 only")
    out = []
    for choice in _choice_functions(g, k):
        key = tuple(choice[s] for s in sorted(choice, key=lambda s: (popcount(s), s)))
        out.append((key, tangle_from_choice(g, choice, k, budget)))
    out.sort(key=lambda kt: kt[0])
    return [t for _, t in out]


def has_graph_tangle(g: Graph, k: int) -> bool:
    if k < 1:
        return True
    return next(_choice_functions(g, k), None) is not None


def max_graph_tangle_order(g: Graph) -> int:
    k = 0
    while has_graph_tangle(g, k + 1):
        k += 1
    return k


# ----------------------------------------------------------------------------
# derived objects


def big_component(g: Graph, t: GraphTangle, s: Iterable[int], budget: int = DEFAULT_BUDGET) -> frozenset[int]:
    """The component ``C`` of ``G - s`` that every member with separator inside ``s`` points at.

    Raises :class:`FalsificationError` unless exactly one component works.
    """
    sm = mask_of(s)
    if popcount(sm) >= t.order:
        raise PreconditionError(f"|s| = {popcount(sm)} must be below the order {t.order}")
    relevant = [x for x in _small_separations(g, t.order, budget) if x.separator & ~sm == 0]
    good = []
    for comp in g.components(g.all_vertices & ~sm):
        if all((x in t.members) == (comp & ~x.verts_b == 0) for x in relevant):
            good.append(comp)
    if len(good) != 1:
        raise FalsificationError(
            f"expected one big component of G - {items_of(sm)}, found {len(good)}",
            witness=[items_of(c) for c in good])
    return frozenset(items_of(good[0]))


def minimal_separations(g: Graph, t: GraphTangle) -> list[Separation]:
    """Members with no other member whose ``B`` is a proper subgraph of theirs.

    Members sharing the same ``B`` are split by their ``A`` sides: only the
    inclusion-largest ``A`` counts as minimal.

    Each one has a connected ``B - V(A)`` whose neighbourhood is exactly the
    separator and whose incident edges are exactly ``E(B)``; that is
    asserted here.
    """
    ms = t.sorted_members()
    out = []
    for s in ms:
        dominated = False
        for o in ms:
            if o == s or o.verts_b & ~s.verts_b or o.edges_b & ~s.edges_b:
                continue
            same_b = o.verts_b == s.verts_b and o.edges_b == s.edges_b
            if not same_b or s.verts_a & ~o.verts_a == 0:
                dominated = True
                break
        if dominated:
            continue
        c = s.verts_b & ~s.verts_a
        if not c or not g.is_connected(c) or g.neighbourhood(c) != s.separator \
                or g.edges_touching(c) != s.edges_b:
            raise FalsificationError("minimal member with a disconnected big side", witness=s)
        out.append(s)
    return out


def tangle_core(g: Graph, t: GraphTangle) -> frozenset[int]:
    """Intersection of ``V(B)`` over all members (checked against minimal members only)."""
    core = g.all_vertices
    for s in t.members:
        core &= s.verts_b
    core_min = g.all_vertices
    for s in minimal_separations(g, t):
        core_min &= s.verts_b
    if core != core_min:
        raise FalsificationError("core over minimal members differs", witness=(core, core_min))
    return frozenset(items_of(core))


def truncate(t: GraphTangle, k2: int) -> GraphTangle:
    if not 1 <= k2 <= t.order:
        raise PreconditionError(f"truncation order {k2} outside 1..{t.order}")
    return GraphTangle(k2, frozenset(s for s in t.members if s.order < k2))


def is_extension(t: GraphTangle, t2: GraphTangle) -> bool:
    """Is ``t`` an extension of ``t2`` (``t2`` a subset of ``t``)?"""
    return t2.members <= t.members


class Restriction(NamedTuple):
    block: frozenset[int]
    tangle: GraphTangle
    subgraph: Graph
    labels: list[int]


def restrict_to_block(g: Graph, t: GraphTangle, budget: int = DEFAULT_BUDGET) -> Restriction:
    """Restrict an order-3 tangle to the biconnected component it lives in.

    ``W`` is the core of the order-2 truncation; each member ``(A, B)``
    becomes ``(A[V(A) n W], B[V(B) n W])`` in ``G[W]`` (relabelled to
    ``1..|W|``; ``labels`` maps back).
    """
    if t.order != 3:
        raise PreconditionError("restriction is defined for order-3 tangles")
    w = tangle_core(g, truncate(t, 2))
    h, labels = g.induced(w)
    new = {v: i + 1 for i, v in enumerate(labels)}

    def relabel(vm):
        return mask_of(new[v] for v in items_of(vm) if v in new)

    def side_edges(vm, em):
        out = 0
        for eid in items_of(em):
            u, v = g.edges[eid - 1]
            if u in new and v in new and vm >> (u - 1) & 1 and vm >> (v - 1) & 1:
                out |= 1 << (h.edge_id[(new[u], new[v])] - 1)
        return out

    members = set()
    for s in t.members:
        ea = side_edges(s.verts_a, s.edges_a)
        members.add(Separation(ea, h.all_edges & ~ea, relabel(s.verts_a), relabel(s.verts_b)))
    tw = GraphTangle(3, frozenset(members))
    report = check_graph_tangle(h, tw, budget)
    if not report.passed:
        raise FalsificationError("restricted family is not a tangle", witness=report.violations)
    core_w = {labels[v - 1] for v in tangle_core(h, tw)}
    if core_w != set(tangle_core(g, t)):
        raise FalsificationError("restriction changed the core", witness=(core_w, tangle_core(g, t)))
    return Restriction(w, tw, h, labels)


def correspondence_targets(g: Graph, k: int) -> list[frozenset[int]]:
    if k == 3:
        return list(k_blocks(g, 2).proper)
    return list(k_blocks(g, k - 1))


def correspondence(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> list[tuple[GraphTangle, frozenset[int]]]:
    """Pair each order-``k`` tangle with its core, for ``k`` in 1, 2, 3.

    The cores must be exactly the components (``k = 1``), the vertex sets
    of biconnected components (``k = 2``) or of proper triconnected
    components (``k = 3``), each tangle must equal ``T^k`` of its core, and
    no two tangles may share a core.  Any failure raises
    :class:`FalsificationError`.
    """
    if k not in (1, 2, 3):
        raise PreconditionError("correspondence is stated for k = 1, 2, 3")
    pairs = []
    for t in enumerate_graph_tangles(g, k, budget):
        core = tangle_core(g, t)
        if tangle_of_set(g, core, k, budget).members != t.members:
            raise FalsificationError(f"tangle is not T^{k} of its core {sorted(core)}", witness=t)
        pairs.append((t, core))
    cores = [c for _, c in pairs]
    targets = correspondence_targets(g, k)
    if len(set(cores)) != len(cores):
        raise FalsificationError("two tangles share a core", witness=cores)
    if set(cores) != set(targets):
        raise FalsificationError(
            "cores and blocks differ",
            witness={"cores": sorted(map(sorted, cores)), "blocks": sorted(map(sorted, targets))})
    return pairs
