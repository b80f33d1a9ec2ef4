"""Reproducing-kernel matrices by closed-form inversion of the Gram matrix.

The inverse of the monomial Gram matrix falls out of the orthogonal
expansion: with A the lower-triangular coefficient matrix and lambda_k the
true squared norms,

    b_ij = sum_{k >= max(i,j)} a_ki * a_kj / lambda_k.

That sum is the primary construction here; the per-family closed forms are
also implemented, but only as documented cross-checks (see
:func:`closed_form_kernel`, including the corrected Legendre factor
placement).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .exactscalar import ScaledRational, gamma_ratio
from .families import Family, coeff_matrix, norm_vector


@dataclass(frozen=True)
class KernelMatrix:
    """Symmetric positive-definite matrix of kernel coefficients b_ij.

    ``entries`` holds the rational core; ``sqrtpi_power`` is the single
    global sqrt(pi) grade every entry shares (0 for Legendre/Laguerre, -1
    for Hermite).  The kernel polynomial is
    ``K(x, y) = sum_ij b_ij x**p_i y**p_j`` with ``p_i`` the family's basis
    powers.
    """

    family: Family
    n: int
    entries: tuple[tuple[Fraction, ...], ...]
    sqrtpi_power: int = 0

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij  # 0-based
        return self.entries[i][j]


def build_kernel(family: Family, n: int) -> KernelMatrix:
    """Kernel matrix B = G**-1 from the orthogonal-expansion sum, exact."""
    if n < 1:
        raise ValueError("n must be >= 1")
    a = coeff_matrix(family, n)
    norms = norm_vector(family, n)
    grade = norms[0].sqrtpi_power  # uniform across the family
    lam = [v.coefficient for v in norms]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            lo = max(i, j)
            row.append(
                sum(
                    (a.entries[k][i] * a.entries[k][j] / lam[k] for k in range(lo, n)),
                    Fraction(0),
                )
            )
        rows.append(tuple(row))
    return KernelMatrix(family, n, tuple(rows), -grade)


def kernel_eval(kernel: KernelMatrix, x: Fraction, y: Fraction) -> ScaledRational:
    """Exact K(x, y) = sum_ij b_ij x**p_i y**p_j."""
    x = Fraction(x)
    y = Fraction(y)
    fam = kernel.family
    xp = [x ** fam.basis_power(i + 1) for i in range(kernel.n)]
    yp = [y ** fam.basis_power(j + 1) for j in range(kernel.n)]
    total = Fraction(0)
    for i in range(kernel.n):
        row = kernel.entries[i]
        total += xp[i] * sum((row[j] * yp[j] for j in range(kernel.n)), Fraction(0))
    return ScaledRational(total, kernel.sqrtpi_power)


def _recip_factorial(m: int) -> Fraction:
    # 1/m!, with 1/(negative)! = 0: the vanishing that truncates the sums
    return Fraction(1, factorial(m)) if m >= 0 else Fraction(0)


def _closed_form_laguerre(n: int) -> tuple[tuple[Fraction, ...], ...]:
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            pref = Fraction((-1) ** (i - 1), factorial(i - 1)) * Fraction(
                (-1) ** (j - 1), factorial(j - 1)
            )
            total = sum(
                comb(k - 1, i - 1) * comb(k - 1, j - 1) for k in range(j, n + 1)
            )
            row.append(pref * total)
        rows.append(tuple(row))
    return tuple(rows)


def _closed_form_legendre(
    family: Family, n: int, printed: bool
) -> tuple[tuple[Fraction, ...], ...]:
    half = Fraction(1, 2) if family.offset == 0 else Fraction(3, 2)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            total = Fraction(0)
            for k in range(j, n + 1):
                if comb(k - 1, i - 1) == 0 or comb(k - 1, j - 1) == 0:
                    continue
                base = Fraction(2 * k, 1) - (
                    Fraction(3, 2) if family.offset == 0 else Fraction(1, 2)
                )
                term = (
                    Fraction((-1) ** (i + j))
                    * comb(k - 1, i - 1)
                    * comb(k - 1, j - 1)
                    / Fraction(factorial(k - 1)) ** 2
                    * gamma_ratio(half + (i - 1), k - 1)
                    * gamma_ratio(half + (j - 1), k - 1)
                )
                # corrected placement multiplies by (2k - 3/2) resp. (2k - 1/2);
                # the as-printed form divides by it instead
                total += term / base if printed else term * base
            row.append(total)
        rows.append(tuple(row))
    return tuple(rows)


def _closed_form_hermite(family: Family, n: int) -> tuple[tuple[Fraction, ...], ...]:
    off = family.offset
    rows = []
    for i in range(1, n + 1):
        p_i = 2 * (i - 1) + off
        row = []
        for j in range(1, n + 1):
            p_j = 2 * (j - 1) + off
            pref = (
                Fraction((-1) ** (i + j))
                * Fraction(2**p_i, factorial(p_i))
                * Fraction(2**p_j, factorial(p_j))
            )
            total = Fraction(0)
            for k in range(j, n + 1):
                p_k = 2 * (k - 1) + off
                total += (
                    Fraction(factorial(p_k), 2**p_k)
                    * _recip_factorial(k - i)
                    * _recip_factorial(k - j)
                )
            row.append(pref * total)
        rows.append(tuple(row))
    return tuple(rows)


def closed_form_kernel(
    family: Family, n: int, *, legendre_printed: bool = False
) -> KernelMatrix:
    """Per-family closed-form b_ij, as a cross-check of :func:`build_kernel`.

    The Laguerre and Hermite closed forms match the generic construction as
    they stand.  The Legendre forms only match with the ``(2k - 3/2)`` /
    ``(2k - 1/2)`` factor as a multiplier; ``legendre_printed=True`` keeps
    it as a divisor instead, which provably fails the inverse-Gram check and
    exists solely so that erratum stays machine-checked.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if family.measure == "laguerre":
        entries, grade = _closed_form_laguerre(n), 0
    elif family.measure == "legendre":
        entries, grade = _closed_form_legendre(family, n, legendre_printed), 0
    else:
        entries, grade = _closed_form_hermite(family, n), -1
    return KernelMatrix(family, n, entries, grade)
