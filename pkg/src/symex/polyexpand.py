"""Monomial coefficients of the expanded binomial product C(m_1+...+m_n, i).

Writing the falling factorial through signed Stirling numbers,
C(N, i) = (1/i!) sum_p s(i, p) N^p with N = m_1+...+m_n, the coefficient of
a monomial with positive exponent vector lambda (|lambda| = p) is
s(i, p) * multinomial(p; lambda) / i!, independent of n.  Grouping terms by
their support subset gives the layer decomposition whose top layer
(support size i, total power i) is exactly e_i.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .bigcomb import binomial_first, multinomial, stirling_first_signed
from .esp import esp_direct
from .report import Report
from .rootset import RootSet
from .subsets import k_subsets

__all__ = [
    "ExponentVector",
    "monomial_coefficient",
    "support_layer",
    "verify_layer_decomposition",
    "SIGN_CONVENTION_NOTE",
]

SIGN_CONVENTION_NOTE = (
    "coefficient signs follow the signed-Stirling expansion of the falling "
    "factorial: at order 4 the two-element coefficients are +22/4!, -18/4!, "
    "+4/4!, +6/4!, and the all-ones coefficient is +1, which pins the "
    "convention; the alternative listing -22/4!, +18/4!, -4/4!, -6/4! is "
    "inconsistent with that +1 and is not used"
)


@dataclass(frozen=True)
class ExponentVector:
    """Ordered positive exponents lambda_1..lambda_s; total power p = sum."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("exponent vector needs at least one part")
        if any(a < 1 for a in parts):
            raise ValueError(f"exponent vector parts must all be >= 1, got {parts}")

    @property
    def p(self) -> int:
        return sum(self.parts)

    @property
    def support(self) -> int:
        return len(self.parts)


def _as_vector(exponents: ExponentVector | Sequence[int]) -> ExponentVector:
    if isinstance(exponents, ExponentVector):
        return exponents
    return ExponentVector(tuple(exponents))


def monomial_coefficient(i: int, exponents: ExponentVector | Sequence[int]) -> Fraction:
    """Exact coefficient of prod_r m_{j_r}^{lambda_r} in the expansion of
    C(m_1+...+m_n, i): s(i, p) * multinomial(p; lambda) / i!.

    Independent of n and of which distinct indices carry the exponents.
    Total powers above i are absent from the expansion, so they yield 0.
    """
    if i < 1:
        raise ValueError(f"order must be >= 1, got {i}")
    vec = _as_vector(exponents)
    if vec.p > i:
        return Fraction(0)
    numerator = stirling_first_signed(i, vec.p) * multinomial(vec.p, vec.parts)
    return Fraction(numerator, math.factorial(i))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    # All orderings of `total` into `parts` positive summands, lexicographic.
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def support_layer(i: int, s: int, p: int) -> list[tuple[ExponentVector, Fraction]]:
    """All exponent vectors with support size s and total power p, in
    lexicographic order, each with its coefficient in the order-i expansion."""
    if not 1 <= s <= p <= i:
        raise ValueError(f"need 1 <= s <= p <= i, got s={s}, p={p}, i={i}")
    return [(ExponentVector(c), monomial_coefficient(i, c)) for c in _compositions(p, s)]


def verify_layer_decomposition(roots: RootSet, i: int) -> Report:
    """Rebuild C(m_1+...+m_n, i) by summing every support layer, and check
    that the top layer (support = power = i) alone is exactly e_i."""
    n = roots.n
    if not 1 <= i <= n:
        raise ValueError(f"need 1 <= i <= n, got i={i}, n={n}")
    elements = roots.elements
    fact_i = math.factorial(i)
    # Accumulate i! * coefficient as plain integers; divide once at the end.
    total_scaled = 0
    top_scaled = 0
    for s in range(1, i + 1):
        layers = [
            (comp, stirling_first_signed(i, p) * multinomial(p, comp))
            for p in range(s, i + 1)
            for comp in _compositions(p, s)
        ]
        for J in k_subsets(n, s):
            ms = tuple(elements[j - 1] for j in J)
            for comp, scaled_coeff in layers:
                term = scaled_coeff * math.prod(m**a for m, a in zip(ms, comp))
                total_scaled += term
                if s == i:
                    top_scaled += term
    report = Report(f"layer decomposition roots={roots} i={i}")
    report.add("full expansion", binomial_first(roots.total, i), Fraction(total_scaled, fact_i))
    report.add(f"top layer s=p={i}", esp_direct(roots, i), Fraction(top_scaled, fact_i))
    report.notes.append(SIGN_CONVENTION_NOTE)
    return report
