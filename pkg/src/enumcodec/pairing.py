"""Cantor pairing of non-negative integers, with a signed variant via zigzag.

Pairs are numbered along anti-diagonals x + y = 0, 1, 2, ...::

    (0,0) -> 0, (1,0) -> 1, (0,1) -> 2, (2,0) -> 3, ...

Inversion uses :func:`math.isqrt`, so it is exact for integers of any size.
"""
from __future__ import annotations

from math import isqrt

from .numeration import int_to_nat, nat_to_int


def _check_nat(*values: int) -> None:
    for v in values:
        if v < 0:
            raise ValueError(f"expected a non-negative integer, got {v}")


def pair(x: int, y: int) -> int:
    _check_nat(x, y)
    s = x + y
    return s * (s + 1) // 2 + y


def unpair(z: int) -> tuple[int, int]:
    _check_nat(z)
    # largest s with s(s+1)/2 <= z
    s = (isqrt(8 * z + 1) - 1) // 2
    y = z - s * (s + 1) // 2
    x = s - y
    if pair(x, y) != z:  # cannot happen with exact isqrt; guards regressions
        raise ArithmeticError(f"unpair({z}) failed forward check")
    return x, y


def pair_int(x: int, y: int) -> int:
    return pair(int_to_nat(x), int_to_nat(y))


def unpair_int(z: int) -> tuple[int, int]:
    a, b = unpair(z)
    return nat_to_int(a), nat_to_int(b)
