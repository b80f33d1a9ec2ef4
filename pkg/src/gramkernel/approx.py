"""Projection of target functions onto the kernel span, and error variances.

A target f is represented by its weighted moments against the family's basis
monomials, ``m_i = integral f(y) y**p_i w(y) dy``, kept exact: rational for
exp(-x) on the half-line, pi-Laurent for sin(pi x)/cos(pi x) on (-1, 1)
(closed by-parts recurrences).  The kernel estimate is then c = B m, the
weighted least-squares projection onto the span, and the error variance

    integral (f - p)**2 w = |f|^2 - 2 sum_k p_k m_k + sum_kl p_k p_l g_kl

is exact for any polynomial p over the same basis, Taylor truncations
included.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from mpmath import mp, mpf

from .exactscalar import (
    DEFAULT_PRECISION_BITS,
    PiLaurent,
    _check_precision,
    eval_pilaurent,
)
from .families import (
    Family,
    LAGUERRE,
    LEGENDRE_EVEN,
    LEGENDRE_ODD,
    monomial_moment,
)
from .kernelbuild import KernelMatrix
from .oracle import gram_from_moments


@dataclass(frozen=True)
class TargetFunction:
    """A function to be approximated, tied to the family whose parity and
    weight it matches, with its exact squared weighted L2 integral."""

    name: str
    natural_family: Family
    squared_integral: PiLaurent


SIN_PI = TargetFunction("sin-pi", LEGENDRE_ODD, PiLaurent(1))
COS_PI = TargetFunction("cos-pi", LEGENDRE_EVEN, PiLaurent(1))
EXP_NEG = TargetFunction("exp-neg", LAGUERRE, PiLaurent(Fraction(1, 3)))

TARGETS = {t.name: t for t in (SIN_PI, COS_PI, EXP_NEG)}


def target_by_name(name: str) -> TargetFunction:
    try:
        return TARGETS[name]
    except KeyError:
        raise ValueError(
            f"unknown target {name!r}; expected one of {sorted(TARGETS)}"
        ) from None


def target_value(target: TargetFunction, x, precision_bits: int = DEFAULT_PRECISION_BITS) -> mpf:
    """Numeric f(x) at the requested precision (for plot data)."""
    _check_precision(precision_bits)
    with mp.workprec(precision_bits):
        xv = mpf(x) if not isinstance(x, Fraction) else mpf(x.numerator) / x.denominator
        if target.name == "sin-pi":
            return mp.sin(mp.pi * xv)
        if target.name == "cos-pi":
            return mp.cos(mp.pi * xv)
        return mp.exp(-xv)


@dataclass(frozen=True)
class MomentVector:
    """Exact moments of some target against a family's basis monomials.

    ``sqrtpi_power`` is a uniform sqrt(pi) grade shared by all entries; it
    is 0 for the three built-in targets and +1 for Hermite monomial-moment
    vectors, where it cancels against the kernel's -1 under projection.
    """

    family: Family
    entries: tuple[PiLaurent, ...]
    sqrtpi_power: int = 0

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class ApproxPolynomial:
    """Polynomial on a family's basis powers: coefficient k multiplies
    ``x**(stride*k + offset)``.  ``kind`` tags how it was produced."""

    family: Family
    coefficients: tuple[PiLaurent, ...]
    kind: str  # "kernel_estimate" | "taylor"

    def __len__(self) -> int:
        return len(self.coefficients)


def _sin_integrals(k_max: int) -> dict[int, PiLaurent]:
    """I_k = integral_{-1}^{1} y**k sin(pi y) dy for odd k <= k_max.

    By parts twice: I_1 = 2/pi and I_k = 2/pi - k(k-1)/pi**2 * I_{k-2}.
    """
    out = {1: PiLaurent.pi_power(-1, 2)}
    for k in range(3, k_max + 1, 2):
        out[k] = PiLaurent.pi_power(-1, 2) + out[k - 2] * PiLaurent.pi_power(
            -2, -Fraction(k * (k - 1))
        )
    return out


def _cos_integrals(m_max: int) -> dict[int, PiLaurent]:
    """J_m = integral_{-1}^{1} y**m cos(pi y) dy for even m <= m_max.

    The sine boundary terms vanish at +/-1, leaving J_0 = 0 and
    J_m = -(m/pi) * I_{m-1}.
    """
    sin_i = _sin_integrals(m_max - 1 if m_max >= 1 else 0)
    out = {0: PiLaurent()}
    for m in range(2, m_max + 1, 2):
        out[m] = sin_i[m - 1] * PiLaurent.pi_power(-1, -Fraction(m))
    return out


def function_moments(target: TargetFunction, n: int) -> MomentVector:
    """Exact moments m_i of the target against its natural family, i = 1..n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    fam = target.natural_family
    if target.name == "exp-neg":
        # integral_0^inf y**k e^-y * e^-y dy = k! / 2**(k+1)
        entries = tuple(
            PiLaurent(Fraction(factorial(k), 2 ** (k + 1))) for k in range(n)
        )
    elif target.name == "sin-pi":
        ints = _sin_integrals(fam.basis_power(n))
        entries = tuple(ints[fam.basis_power(i)] for i in range(1, n + 1))
    else:
        ints = _cos_integrals(fam.basis_power(n))
        entries = tuple(ints[fam.basis_power(i)] for i in range(1, n + 1))
    return MomentVector(fam, entries)


def monomial_moment_vector(family: Family, n: int, power: int) -> MomentVector:
    """Moments of the target x**power against the family basis.

    Entry i is the weighted moment of x**(p_i + power).  Used to exercise
    the reproducing property: projecting an in-span monomial must return it
    exactly.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    grade = 1 if family.measure == "hermite" else 0
    entries = []
    for i in range(1, n + 1):
        m = monomial_moment(family, family.basis_power(i) + power)
        if m.coefficient != 0 and m.sqrtpi_power != grade:
            raise AssertionError("moment grade drifted from the family grade")
        entries.append(PiLaurent(m.coefficient))
    return MomentVector(family, tuple(entries), grade)


def project(kernel: KernelMatrix, moments: MomentVector) -> ApproxPolynomial:
    """Kernel estimate c = B m, the weighted least-squares projection."""
    if kernel.family != moments.family:
        raise ValueError(
            f"kernel family {kernel.family.name} != moment family {moments.family.name}"
        )
    if kernel.n != len(moments):
        raise ValueError(f"kernel size {kernel.n} != moment vector length {len(moments)}")
    if kernel.sqrtpi_power + moments.sqrtpi_power != 0:
        raise ValueError("sqrt(pi) grades do not cancel under projection")
    coeffs = []
    for i in range(kernel.n):
        acc = PiLaurent()
        for j in range(kernel.n):
            acc = acc + moments.entries[j] * kernel.entries[i][j]
        coeffs.append(acc)
    return ApproxPolynomial(kernel.family, tuple(coeffs), "kernel_estimate")


def _check_target_family(target: TargetFunction, family: Family) -> None:
    nat = target.natural_family
    if family.measure != nat.measure or family.offset != nat.offset:
        raise ValueError(
            f"target {target.name} needs the {nat.name} basis, not {family.name}"
        )


def taylor_polynomial(target: TargetFunction, family: Family, n: int) -> ApproxPolynomial:
    """Maclaurin truncation to the first n basis powers of the family.

    exp-neg: sum (-1)**k x**k / k!.  sin-pi: sum (-1)**k pi**(2k+1)
    x**(2k+1) / (2k+1)!.  cos-pi: sum (-1)**k pi**(2k) x**(2k) / (2k)!.
    All with k = 0..n-1; coefficients are exact pi-Laurent values.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_target_family(target, family)
    coeffs = []
    for k in range(n):
        if target.name == "exp-neg":
            coeffs.append(PiLaurent(Fraction((-1) ** k, factorial(k))))
        elif target.name == "sin-pi":
            coeffs.append(PiLaurent.pi_power(2 * k + 1, Fraction((-1) ** k, factorial(2 * k + 1))))
        else:
            coeffs.append(PiLaurent.pi_power(2 * k, Fraction((-1) ** k, factorial(2 * k))))
    return ApproxPolynomial(family, tuple(coeffs), "taylor")


def taylor_comparator(target: TargetFunction, size: int) -> ApproxPolynomial:
    """The Taylor truncation the variance tables compare against at ``size``.

    On the symmetric domains the tabulated comparator cuts the series after
    degree 2*size: for sin-pi that is the same ``size`` odd terms, but for
    cos-pi it keeps ``size + 1`` even terms (through x**(2*size)).  On the
    half-line it is the plain ``size``-term truncation.
    """
    if size < 1:
        raise ValueError("size must be >= 1")
    fam = target.natural_family
    terms = size + 1 if target.name == "cos-pi" else size
    return taylor_polynomial(target, fam, terms)


def error_variance(
    target: TargetFunction,
    poly: ApproxPolynomial,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> tuple[PiLaurent, mpf]:
    """Weighted squared L2 error of ``poly`` against the target, exact.

    Returns the exact pi-Laurent value together with its numeric rendering.
    For kernel estimates the general formula collapses to
    ``|f|^2 - m^T B m``, but the general form is evaluated for every kind.
    """
    if poly.family != target.natural_family:
        raise ValueError(
            f"polynomial family {poly.family.name} does not match target {target.name}"
        )
    n = len(poly)
    moments = function_moments(target, n)
    gram = gram_from_moments(target.natural_family, n)
    if gram.sqrtpi_power != 0:
        raise AssertionError("built-in targets live on grade-0 Gram matrices")
    var = target.squared_integral
    for k in range(n):
        var = var + poly.coefficients[k] * moments.entries[k] * Fraction(-2)
    for k in range(n):
        row = gram.entries[k]
        for l in range(n):
            var = var + poly.coefficients[k] * poly.coefficients[l] * row[l]
    return var, eval_pilaurent(var, precision_bits)


def eval_polynomial(
    poly: ApproxPolynomial, x, precision_bits: int = DEFAULT_PRECISION_BITS
) -> mpf:
    """Horner evaluation at working precision.

    The polynomial is ``x**offset * sum_k c_k (x**stride)**k``, so Horner
    runs in ``t = x**stride`` after the exact coefficients are rounded once.
    """
    _check_precision(precision_bits)
    with mp.workprec(precision_bits + 16):
        xv = mpf(x) if not isinstance(x, Fraction) else mpf(x.numerator) / x.denominator
        cs = [eval_pilaurent(c, precision_bits + 16) for c in poly.coefficients]
        t = xv**poly.family.stride
        acc = mpf(0)
        for c in reversed(cs):
            acc = acc * t + c
        acc *= xv**poly.family.offset
    with mp.workprec(precision_bits):
        return +acc
