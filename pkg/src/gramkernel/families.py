"""The five classical kernel families and their closed-form ingredients.

Each family is a monomial basis attached to a weighted domain.  On the two
symmetric domains the even and odd monomials are mutually orthogonal, so
Legendre and Hermite each split into an even and an odd family; Laguerre's
half-line keeps the full basis.  For every family this module produces, in
exact arithmetic:

* ``coeff_matrix`` -- the lower-triangular expansion of the family's
  orthogonal polynomials in ascending monomial powers,
* ``norm_vector``  -- the true squared weighted L2 norms of those
  polynomials (sqrt(pi)-graded for Hermite),
* ``monomial_moment`` -- the weighted moments that define the Gram matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .exactscalar import ScaledRational, gamma_ratio


@dataclass(frozen=True)
class Family:
    """A monomial basis over one of the three classical weighted domains.

    The 1-based basis element ``i`` is ``x**(stride*(i-1)+offset)``:
    stride 1/offset 0 for Laguerre, stride 2 with offset 0 (even) or 1
    (odd) on the symmetric domains.
    """

    name: str
    measure: str  # "laguerre" | "legendre" | "hermite"
    stride: int
    offset: int
    domain: str
    weight: str

    def basis_power(self, i: int) -> int:
        """Monomial power of the 1-based basis element ``i``."""
        return self.stride * (i - 1) + self.offset


LAGUERRE = Family("laguerre", "laguerre", 1, 0, "(0, inf)", "exp(-x)")
LEGENDRE_EVEN = Family("legendre-even", "legendre", 2, 0, "(-1, 1)", "1")
LEGENDRE_ODD = Family("legendre-odd", "legendre", 2, 1, "(-1, 1)", "1")
HERMITE_EVEN = Family("hermite-even", "hermite", 2, 0, "(-inf, inf)", "exp(-x^2)")
HERMITE_ODD = Family("hermite-odd", "hermite", 2, 1, "(-inf, inf)", "exp(-x^2)")

ALL_FAMILIES = (LAGUERRE, LEGENDRE_EVEN, LEGENDRE_ODD, HERMITE_EVEN, HERMITE_ODD)
FAMILIES = {f.name: f for f in ALL_FAMILIES}


def family_by_name(name: str) -> Family:
    try:
        return FAMILIES[name]
    except KeyError:
        raise ValueError(
            f"unknown family {name!r}; expected one of {sorted(FAMILIES)}"
        ) from None


@lru_cache(maxsize=None)
def double_factorial(m: int) -> int:
    """m!! with the empty-product conventions (-1)!! = 0!! = 1."""
    if m < -1:
        raise ValueError("double factorial needs m >= -1")
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


@dataclass(frozen=True)
class CoeffMatrix:
    """Lower-triangular expansion coefficients of the orthogonal polynomials.

    Row ``i`` (1-based) lists the coefficients of the family's i-th
    orthogonal polynomial on the basis powers, ascending; entries above the
    diagonal are zero and the diagonal never vanishes.
    """

    family: Family
    n: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij  # 0-based
        return self.entries[i][j]


def _coeff_entry(family: Family, i: int, j: int) -> Fraction:
    """a_ij (1-based, j <= i) from the family's closed form."""
    if family.measure == "laguerre":
        return comb(i - 1, j - 1) * Fraction((-1) ** (j - 1), factorial(j - 1))
    if family.measure == "legendre":
        # Gamma((j +/- 1/2) + (i-1)) / Gamma(j +/- 1/2) as a rising product
        base = Fraction(2 * j - 1, 2) if family.offset == 0 else Fraction(2 * j + 1, 2)
        sign = Fraction((-1) ** (i + j))
        return sign * comb(i - 1, j - 1) * gamma_ratio(base, i - 1) / factorial(i - 1)
    # hermite
    deg_i = family.basis_power(i)
    pow_j = family.basis_power(j)
    return (
        factorial(deg_i)
        * Fraction((-1) ** (i - j), factorial(i - j))
        * Fraction(2**pow_j, factorial(pow_j))
    )


def coeff_matrix(family: Family, n: int) -> CoeffMatrix:
    """Exact expansion matrix for the first ``n`` polynomials of the family."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = tuple(
        tuple(
            _coeff_entry(family, i, j) if j <= i else Fraction(0)
            for j in range(1, n + 1)
        )
        for i in range(1, n + 1)
    )
    return CoeffMatrix(family, n, rows)


def norm_vector(family: Family, n: int) -> tuple[ScaledRational, ...]:
    """True squared norms ``integral of p_i**2 * w`` for i = 1..n.

    For the Legendre families these are 2/(4i-3) (even) and 2/(4i-1) (odd);
    see :func:`printed_legendre_norm` for the as-printed reciprocals they are
    sometimes quoted as.  Hermite norms carry a single sqrt(pi) factor.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    for i in range(1, n + 1):
        if family.measure == "laguerre":
            out.append(ScaledRational(Fraction(1)))
        elif family.measure == "legendre":
            den = 4 * i - 3 if family.offset == 0 else 4 * i - 1
            out.append(ScaledRational(Fraction(2, den)))
        else:
            deg = family.basis_power(i)
            out.append(ScaledRational(Fraction(2**deg * factorial(deg)), 1))
    return tuple(out)


def printed_legendre_norm(family: Family, i: int) -> Fraction:
    """The as-printed Legendre norm values ``2i - 3/2`` / ``2i - 1/2``.

    These are the reciprocals of the true squared norms; they are exposed
    read-only for documentation and for the machine-checked erratum test,
    and are never used to build kernels.
    """
    if family.measure != "legendre":
        raise ValueError("printed norm values exist only for the Legendre families")
    if i < 1:
        raise ValueError("i must be >= 1")
    return Fraction(4 * i - 3, 2) if family.offset == 0 else Fraction(4 * i - 1, 2)


def monomial_moment(family: Family, k: int) -> ScaledRational:
    """Weighted moment ``integral over the domain of x**k * w(x) dx``, exact.

    Laguerre: k!.  Legendre: 2/(k+1) for even k, else 0.  Hermite: 0 for odd
    k, else sqrt(pi) * (k-1)!! / 2**(k/2).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if family.measure == "laguerre":
        return ScaledRational(Fraction(factorial(k)))
    if family.measure == "legendre":
        if k % 2 == 1:
            return ScaledRational(Fraction(0))
        return ScaledRational(Fraction(2, k + 1))
    if k % 2 == 1:
        return ScaledRational(Fraction(0))
    return ScaledRational(Fraction(double_factorial(k - 1), 2 ** (k // 2)), 1)
