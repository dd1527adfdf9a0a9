"""Named graph families, seeded random graphs and a small exhaustive catalogue."""

from __future__ import annotations

import random
from itertools import combinations

from .errors import PreconditionError
from .graph import Graph

#: Edges of the 8-vertex example graph keyed by its printed labels ``e1..e10``.
FIG3_LABELLED_EDGES = {
    "e1": (3, 6),
    "e2": (1, 3),
    "e3": (1, 2),
    "e4": (2, 3),
    "e5": (2, 7),
    "e6": (7, 8),
    "e7": (2, 8),
    "e8": (3, 5),
    "e9": (2, 4),
    "e10": (4, 5),
}

NAMES = ("complete", "path", "cycle", "grid", "hexgrid", "subdivided-k4", "fig3")


def fig3_edge(label: str) -> int:
    """Canonical edge id of a printed label such as ``"e5"``."""
    g = fig3()
    return g.edge_id[FIG3_LABELLED_EDGES[label]]


def fig3_edge_mask(*labels: str) -> int:
    m = 0
    for lab in labels:
        m |= 1 << (fig3_edge(lab) - 1)
    return m


def fig3() -> Graph:
    return Graph(8, FIG3_LABELLED_EDGES.values())


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(1, n + 1), 2))


def path(n: int) -> Graph:
    """Path on ``n`` vertices (length ``n - 1``)."""
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def grid(rows: int, cols: int) -> Graph:
    """Row-major ``rows x cols`` grid; vertex ``(i, j)`` is ``i * cols + j + 1``."""
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j + 1
            if j + 1 < cols:
                edges.append((v, v + 1))
            if i + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def grid_rows(rows: int, cols: int) -> list[list[int]]:
    return [[i * cols + j + 1 for j in range(cols)] for i in range(rows)]


def subdivided_k4() -> Graph:
    """K4 on ``1..4`` with each edge subdivided once (new vertices ``5..10``)."""
    edges = []
    for mid, (u, v) in enumerate(combinations(range(1, 5), 2), start=5):
        edges += [(u, mid), (mid, v)]
    return Graph(10, edges)


_AXIAL = ((1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1))


def _hex_cells(rings: int):
    cells = [(q, r) for q in range(-rings, rings + 1) for r in range(-rings, rings + 1)
             if abs(q + r) <= rings]
    corners = {}
    faces = []
    for q, r in cells:
        face = []
        for i in range(6):
            d1, d2 = _AXIAL[i], _AXIAL[(i + 1) % 6]
            key = frozenset({(q, r), (q + d1[0], r + d1[1]), (q + d2[0], r + d2[1])})
            corners.setdefault(key, None)
            face.append(key)
        faces.append(face)
    return cells, faces


def _corner_position(key):
    # sum of the three cell centres in lattice units: (2q + r, r)
    return (sum(r for _, r in key), sum(2 * q + r for q, r in key))


def hexgrid_cells(rings: int, smooth_boundary: bool = True) -> tuple[Graph, list[list[int]]]:
    """Hexagonal grid of ``1 + 3 rings (rings + 1)`` cells with its faces.

    With ``smooth_boundary`` the degree-2 corners on the outer boundary are
    suppressed, as in the drawn figure where those corners are rounded off;
    the result is cubic and 3-connected.  Returns the graph and one vertex
    cycle per cell.
    """
    if rings < 0:
        raise PreconditionError("rings must be nonnegative")
    _, faces = _hex_cells(rings)
    edge_set = set()
    for face in faces:
        for i in range(6):
            a, b = face[i], face[(i + 1) % 6]
            edge_set.add(frozenset((a, b)))
    nbrs = {}
    for e in edge_set:
        a, b = tuple(e)
        nbrs.setdefault(a, set()).add(b)
        nbrs.setdefault(b, set()).add(a)
    keep = set(nbrs)
    if smooth_boundary and rings >= 1:
        keep = {c for c in nbrs if len(nbrs[c]) >= 3}
        edge_set = set()
        for c in keep:
            for start in nbrs[c]:
                prev, cur = c, start
                while cur not in keep:
                    nxt = next(x for x in nbrs[cur] if x != prev)
                    prev, cur = cur, nxt
                if cur != c:
                    edge_set.add(frozenset((c, cur)))
    order = sorted(keep, key=_corner_position)
    label = {c: i + 1 for i, c in enumerate(order)}
    g = Graph(len(order), [tuple(label[x] for x in e) for e in edge_set])
    cells = [[label[c] for c in face if c in label] for face in faces]
    return g, cells


def hexgrid(rings: int) -> Graph:
    return hexgrid_cells(rings)[0]


def named_graph(name: str, params=()) -> Graph:
    """Build one of the graphs listed in :data:`NAMES`.

    ``path N`` takes the vertex count, so ``path 4`` has length 3.
    """
    params = list(params)
    if any(p <= 0 for p in params):
        raise PreconditionError(f"parameters must be positive, got {params}")

    def need(k):
        if len(params) != k:
            raise PreconditionError(f"{name} takes {k} parameter(s), got {len(params)}")

    if name == "complete":
        need(1)
        return complete(params[0])
    if name == "path":
        need(1)
        return path(params[0])
    if name == "cycle":
        need(1)
        return cycle(params[0])
    if name == "grid":
        need(2)
        return grid(*params)
    if name == "hexgrid":
        need(1)
        return hexgrid(params[0])
    if name == "subdivided-k4":
        need(0)
        return subdivided_k4()
    if name == "fig3":
        need(0)
        return fig3()
    raise PreconditionError(f"unknown graph family {name!r}; expected one of {', '.join(NAMES)}")


# ----------------------------------------------------------------------------
# samples


def random_graph(rng: random.Random, max_vertices: int = 8, max_edges: int = 10) -> Graph:
    n = rng.randint(1, max_vertices)
    pairs = list(combinations(range(1, n + 1), 2))
    m = rng.randint(0, min(max_edges, len(pairs)))
    return Graph(n, rng.sample(pairs, m))


def random_graphs(count: int, seed: int = 0, max_vertices: int = 8, max_edges: int = 10) -> list[Graph]:
    rng = random.Random(seed)
    return [random_graph(rng, max_vertices, max_edges) for _ in range(count)]


def connected_catalogue(max_edges: int) -> list[Graph]:
    """One representative of every connected graph with at most ``max_edges`` edges.

    Grown edge by edge from ``K1`` and deduplicated up to isomorphism.
    """
    import networkx as nx

    def to_nx(g):
        h = nx.Graph()
        h.add_nodes_from(g.vertices)
        h.add_edges_from(g.edges)
        return h

    def invariant(g):
        return (g.n, g.m, tuple(sorted(g.degree(v) for v in g.vertices)))

    level = [Graph(1)]
    out = list(level)
    for _ in range(max_edges):
        buckets: dict = {}
        nxt = []
        for g in level:
            cands = [Graph(g.n, g.edges + ((u, v),))
                     for u, v in combinations(g.vertices, 2) if not g.has_edge(u, v)]
            cands += [Graph(g.n + 1, g.edges + ((v, g.n + 1),)) for v in g.vertices]
            for c in cands:
                bucket = buckets.setdefault(invariant(c), [])
                h = to_nx(c)
                if any(nx.is_isomorphic(h, other) for _, other in bucket):
                    continue
                bucket.append((c, h))
                nxt.append(c)
        level = nxt
        out.extend(level)
    return out
