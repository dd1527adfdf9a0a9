"""Connectivity systems ``(U, kappa)``: four concrete functions and axiom checks.

Subsets of the universe ``1..N`` are bitmasks.  Values are memoised under
the smaller of ``X`` and its complement, so the memo assumes symmetry;
:func:`verify_axioms` therefore evaluates the raw function.
"""

from __future__ import annotations

import random
import threading
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .bits import items_of, iter_bits, mask_of
from .errors import ParseError, PreconditionError
from .gf2 import columns_from_matrix, gf2_rank
from .graph import Graph, parse_graph

EXHAUSTIVE_LIMIT = 12

KIND_ALIASES = {
    "edge": "edge-conn",
    "edge-conn": "edge-conn",
    "vertex": "vertex-conn",
    "vertex-conn": "vertex-conn",
    "cutrank": "cut-rank",
    "cut-rank": "cut-rank",
    "matroid": "matroid",
}


@dataclass(frozen=True)
class MatroidOracle:
    """Rank oracle on the ground set ``1..size``."""

    size: int
    rank: Callable[[int], int]
    names: tuple[str, ...] = ()
    kind: str = "custom"


def graphic_matroid(g: Graph) -> MatroidOracle:
    """Cycle matroid of ``g``: rank(X) = n - #components of ``(V, X)``."""

    def rank(x: int) -> int:
        parent = list(range(g.n + 1))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        r = 0
        for b in iter_bits(x):
            u, v = g.edges[b.bit_length() - 1]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                r += 1
        return r

    names = tuple(f"{u}-{v}" for u, v in g.edges)
    return MatroidOracle(g.m, rank, names, "graphic")


def binary_matroid(matrix: Sequence[Sequence[int]]) -> MatroidOracle:
    """Column matroid of a 0/1 matrix over the 2-element field."""
    cols = columns_from_matrix(matrix)

    def rank(x: int) -> int:
        return gf2_rank(cols[b.bit_length() - 1] for b in iter_bits(x))

    return MatroidOracle(len(cols), rank, tuple(f"c{j + 1}" for j in range(len(cols))), "binary")


def parse_matroid(text: str) -> MatroidOracle:
    """``rank-matrix N M`` and an ``N x M`` 0/1 matrix, or ``graphic`` and a graph body."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty matroid document")
    head = lines[0].split()
    if head[0] == "graphic":
        return graphic_matroid(parse_graph("\n".join(lines[1:])))
    if head[0] != "rank-matrix" or len(head) != 3:
        raise ParseError("matroid header must be 'rank-matrix N M' or 'graphic'")
    try:
        n, m = int(head[1]), int(head[2])
        rows = [[int(x) for x in ln.split()] for ln in lines[1:]]
    except ValueError:
        raise ParseError("matrix entries must be integers") from None
    if len(rows) != n or any(len(r) != m for r in rows):
        raise ParseError(f"expected a {n} x {m} matrix")
    if any(x not in (0, 1) for r in rows for x in r):
        raise ParseError("matrix entries must be 0 or 1")
    if n == 0:
        return MatroidOracle(m, lambda x: 0, tuple(f"c{j + 1}" for j in range(m)), "binary")
    return binary_matroid(rows)


@dataclass
class ConnectivitySystem:
    """A finite universe with a connectivity function.

    ``raw`` is the function as given; :meth:`kappa` memoises it.
    """

    size: int
    raw: Callable[[int], int]
    kind: str = "custom"
    names: tuple[str, ...] = ()
    data: object = None
    _memo: dict = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def kappa(self, x: int) -> int:
        key = min(x, self.full ^ x)
        val = self._memo.get(key)
        if val is None:
            val = self.raw(key)
            with self._lock:
                self._memo[key] = val
        return val

    def table(self) -> np.ndarray:
        """Raw values for every subset, indexed by bitmask."""
        return np.array([self.raw(x) for x in range(1 << self.size)], dtype=np.int64)

    def name(self, i: int) -> str:
        return self.names[i - 1] if self.names else str(i)


def _edge_conn(g: Graph) -> Callable[[int], int]:
    ends = g.ends

    def nu(x: int) -> int:
        return sum(1 for e in ends if 0 != e & x != e)

    return nu


def _vertex_conn(g: Graph) -> Callable[[int], int]:
    inc = [i for i in g.incident[1:] if i]

    def kappa(x: int) -> int:
        return sum(1 for i in inc if i & x and i & ~x)

    return kappa


def _cut_rank(g: Graph) -> Callable[[int], int]:
    adj = g.adj
    full = g.all_vertices

    def rho(x: int) -> int:
        rest = full & ~x
        return gf2_rank(adj[b.bit_length()] & rest for b in iter_bits(x))

    return rho


def _matroid_conn(mo: MatroidOracle) -> Callable[[int], int]:
    full = (1 << mo.size) - 1
    total = mo.rank(full)

    def kappa(x: int) -> int:
        return mo.rank(x) + mo.rank(full & ~x) - total

    return kappa


def make_system(kind: str, data) -> ConnectivitySystem:
    """Build ``nu_G``, ``kappa_G``, ``rho_G`` or ``kappa_M``.

    ``edge-conn`` and ``cut-rank`` live on ``V(G)``, ``vertex-conn`` on
    ``E(G)`` (edge ids), ``matroid`` on the matroid's ground set.  A graph
    passed with kind ``matroid`` is read as its cycle matroid.
    """
    canon = KIND_ALIASES.get(kind)
    if canon is None:
        raise PreconditionError(f"unknown system kind {kind!r}")
    if canon == "matroid":
        if isinstance(data, Graph):
            data = graphic_matroid(data)
        if not isinstance(data, MatroidOracle):
            raise PreconditionError("matroid systems need a MatroidOracle or a Graph")
        return ConnectivitySystem(data.size, _matroid_conn(data), canon, data.names, data)
    if not isinstance(data, Graph):
        raise PreconditionError(f"{canon} systems need a Graph")
    if canon == "edge-conn":
        return ConnectivitySystem(data.n, _edge_conn(data), canon, tuple(map(str, data.vertices)), data)
    if canon == "cut-rank":
        return ConnectivitySystem(data.n, _cut_rank(data), canon, tuple(map(str, data.vertices)), data)
    names = tuple(f"{u}-{v}" for u, v in data.edges)
    return ConnectivitySystem(data.m, _vertex_conn(data), canon, names, data)


def evaluate(sys: ConnectivitySystem, x: Iterable[int]) -> int:
    """``kappa(x)`` for a subset given by element ids."""
    xs = list(x)
    if any(not 1 <= i <= sys.size for i in xs):
        raise PreconditionError(f"subset {xs} leaves the universe 1..{sys.size}")
    return sys.kappa(mask_of(xs))


# ----------------------------------------------------------------------------
# axioms


@dataclass
class SystemReport:
    normalized: bool = True
    symmetry: tuple[int, ...] | None = None  # (X,) with kappa(X) != kappa(complement)
    submodularity: tuple[int, int] | None = None  # (X, Y) violating the inequality
    exhaustive: bool = True
    checked_pairs: int = 0

    @property
    def passed(self) -> bool:
        return self.normalized and self.symmetry is None and self.submodularity is None

    def __bool__(self):
        return self.passed

    def describe(self) -> dict:
        return {
            "passed": self.passed,
            "normalized": self.normalized,
            "symmetry_counterexample": None if self.symmetry is None else [items_of(self.symmetry[0])],
            "submodularity_counterexample":
                None if self.submodularity is None else [items_of(s) for s in self.submodularity],
            "exhaustive": self.exhaustive,
            "checked_pairs": self.checked_pairs,
        }


def verify_axioms(sys: ConnectivitySystem, samples: int | None = None, seed: int = 0) -> SystemReport:
    """Check normalisation, symmetry and submodularity of ``sys.raw``.

    Universes of at most :data:`EXHAUSTIVE_LIMIT` elements are checked on
    all pairs ``(X, Y)``; larger ones need ``samples`` random pairs.  The
    first counterexample of each kind is reported, never raised.
    """
    n = sys.size
    full = sys.full
    rep = SystemReport()
    rep.normalized = sys.raw(0) == 0
    if n <= EXHAUSTIVE_LIMIT and samples is None:
        tab = sys.table()
        idx = np.arange(1 << n)
        bad = np.nonzero(tab != tab[full ^ idx])[0]
        if bad.size:
            rep.symmetry = (int(bad[0]),)
        chunk = max(1, (1 << 22) >> n)
        for lo in range(0, 1 << n, chunk):
            xs = idx[lo:lo + chunk, None]
            lhs = tab[xs] + tab[None, :]
            rhs = tab[xs & idx[None, :]] + tab[xs | idx[None, :]]
            viol = np.argwhere(lhs < rhs)
            if viol.size:
                i, j = viol[0]
                rep.submodularity = (int(lo + i), int(j))
                break
        rep.checked_pairs = 1 << (2 * n)
        return rep
    if samples is None:
        raise PreconditionError(f"universe of {n} elements needs a sample count")
    rep.exhaustive = False
    rng = random.Random(seed)
    for _ in range(samples):
        x, y = rng.getrandbits(n) if n else 0, rng.getrandbits(n) if n else 0
        if rep.symmetry is None and sys.raw(x) != sys.raw(full ^ x):
            rep.symmetry = (x,)
        if rep.submodularity is None and \
                sys.raw(x) + sys.raw(y) < sys.raw(x & y) + sys.raw(x | y):
            rep.submodularity = (x, y)
    rep.checked_pairs = samples
    return rep
