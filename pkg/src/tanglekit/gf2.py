"""Rank over the 2-element field with rows packed into Python ints."""

from __future__ import annotations

from typing import Iterable


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank of the 0/1 matrix whose rows are the given bitmasks."""
    pivots: dict[int, int] = {}  # leading bit -> basis row
    for r in rows:
        while r:
            top = r.bit_length()
            if top not in pivots:
                pivots[top] = r
                break
            r ^= pivots[top]
    return len(pivots)


def rows_from_matrix(matrix) -> list[int]:
    return [sum(1 << j for j, x in enumerate(row) if x) for row in matrix]


def columns_from_matrix(matrix) -> list[int]:
    """Column ``j`` as a bitmask over row indices."""
    matrix = [list(r) for r in matrix]
    ncols = len(matrix[0]) if matrix else 0
    return [sum(1 << i for i, row in enumerate(matrix) if row[j]) for j in range(ncols)]
