"""Simple undirected graphs over vertices ``1..n``.

Edges are stored as sorted endpoint pairs in lexicographic order, and edge
ids ``1..m`` follow that order.  Vertex sets and edge sets are passed around
as integer bitmasks (see :mod:`tanglekit.bits`).
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

from .bits import items_of, iter_bits, mask_of
from .errors import ParseError, PreconditionError


class Graph:
    """Immutable simple graph.

    Parameters
    ----------
    n : int
        Number of vertices; vertices are ``1..n``.
    edges : iterable of pairs
        Unordered vertex pairs.  Duplicates and loops are rejected.
    """

    __slots__ = ("n", "edges", "__dict__")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise PreconditionError(f"vertex count must be nonnegative, got {n}")
        norm = []
        for e in edges:
            u, v = e
            if u == v:
                raise PreconditionError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise PreconditionError(f"edge {u}-{v} has an endpoint outside 1..{n}")
            norm.append((u, v) if u < v else (v, u))
        canon = sorted(norm)
        if len(set(canon)) != len(canon):
            raise PreconditionError("multi-edges are not allowed")
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(canon)

    # identity -------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    # basic views ----------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def all_vertices(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def all_edges(self) -> int:
        return (1 << self.m) - 1

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """``adj[v]`` is the neighbourhood bitmask of ``v`` (index 0 unused)."""
        nb = [0] * (self.n + 1)
        for u, v in self.edges:
            nb[u] |= 1 << (v - 1)
            nb[v] |= 1 << (u - 1)
        return tuple(nb)

    @cached_property
    def incident(self) -> tuple[int, ...]:
        """``incident[v]`` is the bitmask of edge ids at ``v`` (index 0 unused)."""
        inc = [0] * (self.n + 1)
        for i, (u, v) in enumerate(self.edges):
            inc[u] |= 1 << i
            inc[v] |= 1 << i
        return tuple(inc)

    @cached_property
    def ends(self) -> tuple[int, ...]:
        """``ends[i]`` is the endpoint bitmask of the edge with id ``i + 1``."""
        return tuple((1 << (u - 1)) | (1 << (v - 1)) for u, v in self.edges)

    @cached_property
    def edge_id(self) -> dict[tuple[int, int], int]:
        return {e: i + 1 for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> (v - 1) & 1)

    def edge_mask(self, pairs: Iterable[Sequence[int]]) -> int:
        m = 0
        for u, v in pairs:
            key = (u, v) if u < v else (v, u)
            try:
                m |= 1 << (self.edge_id[key] - 1)
            except KeyError:
                raise PreconditionError(f"{u}-{v} is not an edge") from None
        return m

    # set operations on bitmasks --------------------------------------------

    def endpoints(self, emask: int) -> int:
        """Vertex mask of all endpoints of the edges in ``emask``."""
        out = 0
        ends = self.ends
        for b in iter_bits(emask):
            out |= ends[b.bit_length() - 1]
        return out

    def edges_within(self, vmask: int) -> int:
        """Edges with both endpoints in ``vmask``."""
        out = 0
        for i, e in enumerate(self.ends):
            if e & vmask == e:
                out |= 1 << i
        return out

    def edges_touching(self, vmask: int) -> int:
        """Edges with at least one endpoint in ``vmask``."""
        out = 0
        inc = self.incident
        for b in iter_bits(vmask):
            out |= inc[b.bit_length()]
        return out

    def neighbourhood(self, vmask: int) -> int:
        """Open neighbourhood ``N(W)`` of a vertex set."""
        out = 0
        adj = self.adj
        for b in iter_bits(vmask):
            out |= adj[b.bit_length()]
        return out & ~vmask

    def reach(self, start: int, within: int) -> int:
        """Vertices reachable from mask ``start`` inside mask ``within``."""
        adj = self.adj
        seen = start & within
        frontier = seen
        while frontier:
            nxt = 0
            for b in iter_bits(frontier):
                nxt |= adj[b.bit_length()]
            frontier = nxt & within & ~seen
            seen |= frontier
        return seen

    def components(self, within: int | None = None) -> list[int]:
        """Connected components of ``G[within]`` as vertex masks, ordered by least vertex."""
        if within is None:
            within = self.all_vertices
        out = []
        rest = within
        while rest:
            comp = self.reach(rest & -rest, within)
            out.append(comp)
            rest &= ~comp
        return out

    def is_connected(self, within: int | None = None) -> bool:
        return len(self.components(within)) <= 1

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``1..|W|`` plus the old labels in order."""
        keep = sorted(set(vertices))
        new = {v: i + 1 for i, v in enumerate(keep)}
        sub = [(new[u], new[v]) for u, v in self.edges if u in new and v in new]
        return Graph(len(keep), sub), keep


# ----------------------------------------------------------------------------
# text format


def parse_graph(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` starts a comment."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise ParseError("empty graph document")
    try:
        header = [int(x) for x in rows[0]]
        if len(header) != 2:
            raise ValueError
        n, m = header
        pairs = []
        for row in rows[1:]:
            if len(row) != 2:
                raise ValueError
            pairs.append((int(row[0]), int(row[1])))
    except ValueError:
        raise ParseError("graph lines must hold exactly two integers") from None
    if len(pairs) != m:
        raise ParseError(f"header announces {m} edges, found {len(pairs)}")
    try:
        return Graph(n, pairs)
    except PreconditionError as exc:
        raise ParseError(str(exc)) from None


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def vertex_list(mask: int) -> list[int]:
    return items_of(mask)


def vertex_mask(vertices: Iterable[int]) -> int:
    return mask_of(vertices)
