"""Integer bitset helpers.

Element ``i`` (1-based) lives at bit ``i - 1``.
"""

from __future__ import annotations

from typing import Iterable


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        m |= 1 << (i - 1)
    return m


def items_of(mask: int) -> list[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest(mask: int) -> int:
    """1-based index of the lowest set bit (0 for the empty mask)."""
    return (mask & -mask).bit_length()


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def submasks(mask: int):
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def submasks_upto(mask: int, size: int):
    """Submasks of ``mask`` with at most ``size`` bits, smallest first."""
    from itertools import combinations

    bits = list(iter_bits(mask))
    for r in range(min(size, len(bits)) + 1):
        for combo in combinations(bits, r):
            s = 0
            for b in combo:
                s |= b
            yield s
