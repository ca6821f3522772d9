"""Exact combinatorial primitives on arbitrary-precision integers.

Generalized binomials (negative upper argument allowed), multichoose,
falling factorials, signed Stirling numbers of the first kind, and
multinomials.  Every value is an exact Python int; no floats anywhere.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence

__all__ = [
    "falling_factorial",
    "binomial_first",
    "binomial_second",
    "stirling_first_signed",
    "multinomial",
]


def falling_factorial(x: int, k: int) -> int:
    """x(x-1)...(x-k+1), with the empty product 1 for k = 0."""
    if k < 0:
        raise ValueError(f"factor count must be >= 0, got {k}")
    out = 1
    for j in range(k):
        out *= x - j
    return out


def binomial_first(x: int, k: int) -> int:
    """Binomial number of the first kind C(x, k) = falling_factorial(x, k) / k!.

    Defined for any integer x (the unique polynomial extension in x), so a
    negative upper argument is fine.  For 0 <= x < k the falling factorial
    crosses zero and the result is 0.  The division by k! is always exact.
    """
    if k < 0:
        raise ValueError(f"choice count must be >= 0, got {k}")
    if x >= 0:
        return math.comb(x, k)
    return falling_factorial(x, k) // math.factorial(k)


def binomial_second(x: int, k: int) -> int:
    """Binomial number of the second kind (multichoose): rising factorial
    x(x+1)...(x+k-1) over k!.  Returns 1 when k = 0, even for x = 0."""
    if x < 0:
        raise ValueError(f"multichoose needs a nonnegative base, got {x}")
    if k < 0:
        raise ValueError(f"choice count must be >= 0, got {k}")
    rising = 1
    for j in range(k):
        rising *= x + j
    return rising // math.factorial(k)


@lru_cache(maxsize=None)
def _stirling_row(i: int) -> tuple[int, ...]:
    # Row i holds s(i, p) for p = 0..i, built from s(i, p) = s(i-1, p-1) - (i-1)*s(i-1, p).
    if i == 0:
        return (1,)
    prev = _stirling_row(i - 1)
    row = []
    for p in range(i + 1):
        above_left = prev[p - 1] if p >= 1 else 0
        above = prev[p] if p <= i - 1 else 0
        row.append(above_left - (i - 1) * above)
    return tuple(row)


def stirling_first_signed(i: int, p: int) -> int:
    """Signed Stirling number of the first kind s(i, p): the coefficient of
    x^p in the falling factorial x(x-1)...(x-i+1).  s(0, 0) = 1; p > i gives 0."""
    if i < 0:
        raise ValueError(f"row index must be >= 0, got {i}")
    if p < 0:
        raise ValueError(f"power must be >= 0, got {p}")
    if p > i:
        return 0
    return _stirling_row(i)[p]


def multinomial(p: int, parts: Sequence[int]) -> int:
    """p! / (parts[0]! * ... * parts[-1]!): how many ways the positive
    exponents `parts` (which must sum to p) can be distributed."""
    parts = tuple(parts)
    if any(a < 1 for a in parts):
        raise ValueError(f"exponent vector parts must all be >= 1, got {parts}")
    if sum(parts) != p:
        raise ValueError(f"exponent vector {parts} does not sum to {p}")
    return math.factorial(p) // math.prod(math.factorial(a) for a in parts)
