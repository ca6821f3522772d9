"""Three routes to the elementary symmetric polynomial e_i of a root set.

* esp_direct: the definition, summing products over i-element subsets.
* esp_all: the classical one-pass product recurrence, all orders at once.
* esp_extraction: the binomial-product sieve, which starts from
  C(m_1+...+m_n, i) and subtracts alternating multichoose-weighted sums of
  C(subset sum, i) over all (i-h)-subsets, h = 1..i-1.

esp_extraction also returns a term-by-term breakdown so every bracket can
be inspected, and esp_compare times the three routes against each other.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import Callable, Sequence

from .bigcomb import binomial_first, binomial_second, stirling_first_signed
from .rootset import RootSet
from .subsets import IndexSubset, k_subsets

__all__ = [
    "DEFAULT_EXPLAIN_LIMIT",
    "ExtractionDomainError",
    "BreakdownTerm",
    "ExtractionBreakdown",
    "ComparisonEntry",
    "ComparisonReport",
    "esp_direct",
    "esp_all",
    "esp_extraction",
    "esp_loworder",
    "esp_compare",
    "specialize",
]

# Above this root-set size, breakdowns keep bracket totals only: the number
# of per-subset lines is C(n, i-h) and blows up.
DEFAULT_EXPLAIN_LIMIT = 12


class ExtractionDomainError(ValueError):
    """The sieve was asked for an order outside its proven domain (i > n)."""


def esp_direct(roots: RootSet, i: int) -> int:
    """e_i by definition: the sum over all i-element index subsets of the
    product of the selected roots.  e_0 = 1 (empty product); i > n gives 0."""
    if i < 0:
        raise ValueError(f"order must be >= 0, got {i}")
    if i == 0:
        return 1
    if i > roots.n:
        return 0
    return sum(prod(combo) for combo in combinations(roots.elements, i))


def esp_all(roots: RootSet) -> list[int]:
    """All of e_0..e_n at once: coefficients of prod_j (1 + m_j x), built by
    the one-pass recurrence e_i += m_k * e_{i-1}."""
    values = [0] * (roots.n + 1)
    values[0] = 1
    for count, m in enumerate(roots.elements, start=1):
        for j in range(count, 0, -1):
            values[j] += m * values[j - 1]
    return values


@dataclass(frozen=True)
class BreakdownTerm:
    """One sieve bracket: the (i-h)-subset binomials and their signed weight.

    `coefficient` is the additive weight: total = head + sum of
    coefficient * bracket_total over all terms.  `bracket` holds the
    per-subset detail and is None when the root set exceeded the explain
    limit at construction time.
    """

    h: int
    coefficient: int
    bracket_total: int
    bracket: tuple[tuple[IndexSubset, int], ...] | None


@dataclass(frozen=True)
class ExtractionBreakdown:
    i: int
    head: int
    terms: tuple[BreakdownTerm, ...]
    total: int

    def recomputed_total(self) -> int:
        """Re-derive the value from the stored parts (self-consistency check)."""
        return self.head + sum(term.coefficient * term.bracket_total for term in self.terms)


def esp_extraction(
    roots: RootSet,
    i: int,
    *,
    explain_limit: int = DEFAULT_EXPLAIN_LIMIT,
    weights: Sequence[int] | None = None,
) -> tuple[int, ExtractionBreakdown]:
    """e_i via the binomial-product sieve, with its full term breakdown.

    head = C(m_1+...+m_n, i); for each h = 1..i-1 the bracket sums
    C(sum of m_j over J, i) over all (i-h)-subsets J, and is subtracted
    with weight C_h = (-1)^(h-1) * multichoose(n-i+1, h-1).

    `weights` optionally supplies precomputed C_1..C_{i-1} (signs included),
    e.g. from the recurrence route; the result must not change.  Orders
    above n are refused rather than silently extrapolated.
    """
    n = roots.n
    if i < 0:
        raise ValueError(f"order must be >= 0, got {i}")
    if i == 0:
        return 1, ExtractionBreakdown(0, 1, (), 1)
    if i > n:
        raise ExtractionDomainError(f"order {i} exceeds root set size {n}; use the direct route")
    if weights is not None and len(weights) < i - 1:
        raise ValueError(f"need {i - 1} sieve weights, got {len(weights)}")

    elements = roots.elements
    head = binomial_first(roots.total, i)
    value = head
    keep_detail = n <= explain_limit
    terms = []
    for h in range(1, i):
        if weights is not None:
            sieve = weights[h - 1]
        else:
            magnitude = binomial_second(n - i + 1, h - 1)
            sieve = magnitude if h % 2 == 1 else -magnitude
        if keep_detail:
            bracket = tuple(
                (J, binomial_first(sum(elements[j - 1] for j in J), i))
                for J in k_subsets(n, i - h)
            )
            bracket_total = sum(entry for _, entry in bracket)
        else:
            bracket = None
            bracket_total = sum(binomial_first(sum(combo), i) for combo in combinations(elements, i - h))
        value -= sieve * bracket_total
        terms.append(BreakdownTerm(h, -sieve, bracket_total, bracket))
    return value, ExtractionBreakdown(i, head, tuple(terms), value)


def esp_loworder(roots: RootSet, i: int) -> int:
    """e_1..e_5 spelled out literally, bracket by bracket, with hard-coded
    multichoose weights and sign pattern.

    Kept deliberately independent of the general sieve loop so the two can
    cross-check each other.  Requires n >= i - 1 (the multichoose base
    n - i + 1 must stay nonnegative).
    """
    n = roots.n
    if not 1 <= i <= 5:
        raise ValueError(f"only orders 1..5 are spelled out, got {i}")
    if n < i - 1:
        raise ValueError(f"need n >= {i - 1} for order {i}, got n={n}")
    N = roots.total

    def bracket(size: int) -> int:
        return sum(binomial_first(sum(combo), i) for combo in combinations(roots.elements, size))

    if i == 1:
        return binomial_first(N, 1)
    if i == 2:
        return binomial_first(N, 2) - binomial_second(n - 1, 0) * bracket(1)
    if i == 3:
        return (
            binomial_first(N, 3)
            - binomial_second(n - 2, 0) * bracket(2)
            + binomial_second(n - 2, 1) * bracket(1)
        )
    if i == 4:
        return (
            binomial_first(N, 4)
            - binomial_second(n - 3, 0) * bracket(3)
            + binomial_second(n - 3, 1) * bracket(2)
            - binomial_second(n - 3, 2) * bracket(1)
        )
    return (
        binomial_first(N, 5)
        - binomial_second(n - 4, 0) * bracket(4)
        + binomial_second(n - 4, 1) * bracket(3)
        - binomial_second(n - 4, 2) * bracket(2)
        + binomial_second(n - 4, 3) * bracket(1)
    )


@dataclass(frozen=True)
class ComparisonEntry:
    method: str
    value: int
    seconds: float


@dataclass(frozen=True)
class ComparisonReport:
    roots: RootSet
    i: int
    entries: tuple[ComparisonEntry, ...]
    agree: bool

    @property
    def value(self) -> int:
        return self.entries[0].value


METHOD_NAMES = ("direct", "dp", "extraction")


def _method_runner(method: str) -> Callable[[RootSet, int], int]:
    if method == "direct":
        return esp_direct
    if method == "dp":
        return lambda roots, i: esp_all(roots)[i]
    if method == "extraction":
        return lambda roots, i: esp_extraction(roots, i, explain_limit=0)[0]
    raise ValueError(f"unknown method {method!r}, expected one of {METHOD_NAMES}")


def esp_compare(
    roots: RootSet,
    i: int,
    methods: Sequence[str] = METHOD_NAMES,
    repetitions: int = 3,
) -> ComparisonReport:
    """Run the named methods on the same input and report values, agreement,
    and the median wall-clock time over `repetitions` runs (minimum 3)."""
    if not 1 <= i <= roots.n:
        raise ExtractionDomainError(f"need 1 <= i <= n, got i={i}, n={roots.n}")
    if not methods:
        raise ValueError("need at least one method")
    repetitions = max(repetitions, 3)
    entries = []
    for method in methods:
        run = _method_runner(method)
        elapsed = []
        value = 0
        for _ in range(repetitions):
            start = time.perf_counter()
            value = run(roots, i)
            elapsed.append(time.perf_counter() - start)
        entries.append(ComparisonEntry(method, value, statistics.median(elapsed)))
    agree = len({entry.value for entry in entries}) == 1
    return ComparisonReport(roots, i, tuple(entries), agree)


def specialize(family: str, rows: int) -> list[list[int]]:
    """Number-triangle specializations of the sieve.

    family "pascal": the all-ones root set of size n, whose e_i are the
    binomials C(n, i).  family "stirling1": the root set {1, ..., n}, whose
    e_i are unsigned Stirling numbers of the first kind; every row is
    cross-checked against the signed-Stirling recurrence before returning.
    """
    if family not in ("pascal", "stirling1"):
        raise ValueError(f"unknown family {family!r}, expected 'pascal' or 'stirling1'")
    if rows < 1:
        raise ValueError(f"need rows >= 1, got {rows}")
    triangle = []
    for n in range(1, rows + 1):
        if family == "pascal":
            roots = RootSet((1,) * n)
        else:
            roots = RootSet(tuple(range(1, n + 1)))
        row = [esp_extraction(roots, i, explain_limit=0)[0] for i in range(n + 1)]
        if family == "stirling1":
            recurrence_row = [abs(stirling_first_signed(n + 1, n + 1 - i)) for i in range(n + 1)]
            if row != recurrence_row:
                raise ArithmeticError(
                    f"stirling1 row {n} disagrees with the recurrence triangle: {row} vs {recurrence_row}"
                )
        triangle.append(row)
    return triangle
