"""Infinity-norm condition numbers of the monomial Gram matrices.

kappa(G) = ||G||_inf * ||G**-1||_inf, computed entirely in exact rational
arithmetic.  For the Hermite families the +1 grade of G and the -1 grade of
its inverse cancel, so kappa is a pure rational for every family; decimal
strings are rendered from the exact value afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .exactscalar import decimal_str
from .families import Family
from .kernelbuild import build_kernel
from .oracle import gram_from_moments


@dataclass(frozen=True)
class ConditionRow:
    size: int
    kappa_exact: Fraction
    kappa_decimal: str


@dataclass(frozen=True)
class ConditionReport:
    family: Family
    rows: tuple[ConditionRow, ...]


def inf_norm(entries: Iterable[Iterable[Fraction]]) -> Fraction:
    """Maximum absolute row sum, exact."""
    norms = [sum((abs(x) for x in row), Fraction(0)) for row in entries]
    if not norms:
        raise ValueError("matrix must be nonempty")
    return max(norms)


def condition_number(family: Family, n: int) -> Fraction:
    """kappa_inf of the size-n monomial Gram matrix, as an exact rational."""
    gram = gram_from_moments(family, n)
    kernel = build_kernel(family, n)
    if gram.sqrtpi_power + kernel.sqrtpi_power != 0:
        raise AssertionError("sqrt(pi) grades failed to cancel in kappa")
    return inf_norm(gram.entries) * inf_norm(kernel.entries)


def condition_table(family: Family, max_size: int, sig_digits: int = 17) -> ConditionReport:
    """Rows (size, exact kappa, decimal kappa) for sizes 1..max_size."""
    if max_size < 1:
        raise ValueError("max_size must be >= 1")
    rows = tuple(
        ConditionRow(n, kappa, decimal_str(kappa, sig_digits))
        for n in range(1, max_size + 1)
        for kappa in (condition_number(family, n),)
    )
    return ConditionReport(family, rows)
