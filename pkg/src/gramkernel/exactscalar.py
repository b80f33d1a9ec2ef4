"""Exact scalar arithmetic for kernel construction.

Everything downstream (coefficient matrices, Gram inverses, error variances)
is assembled from three exact carriers:

* plain rationals (``fractions.Fraction``),
* :class:`ScaledRational` -- a rational times an integer power of sqrt(pi),
  which is the grading Hermite norms and kernel entries live in,
* :class:`PiLaurent` -- a finite sum ``sum_m q_m * pi**m`` with rational
  ``q_m``, which carries trigonometric moments and Taylor coefficients.

Numeric evaluation (``mpmath`` at a caller-chosen binary precision) is the
only lossy operation in the package and is confined to this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Union

from mpmath import mp, mpf, nstr

DEFAULT_PRECISION_BITS = 256
MIN_PRECISION_BITS = 128

RationalLike = Union[int, Fraction]


class GradeMismatchError(ArithmeticError):
    """Adding exact values of distinct sqrt(pi) grade is not representable."""


def _check_precision(precision_bits: int) -> None:
    if precision_bits < MIN_PRECISION_BITS:
        raise ValueError(
            f"precision_bits must be >= {MIN_PRECISION_BITS}, got {precision_bits}"
        )


def gamma_ratio(base_half: RationalLike, steps: int) -> Fraction:
    """Rising product ``base*(base+1)*...*(base+steps-1)`` of a half-integer.

    This equals ``Gamma(base+steps)/Gamma(base)`` without evaluating Gamma,
    so ratios of half-integer Gamma values stay exact rationals.  The empty
    product (``steps == 0``) is 1.
    """
    base = Fraction(base_half)
    if base <= 0 or base.denominator not in (1, 2):
        raise ValueError(f"base must be a positive half-integer, got {base}")
    if steps < 0:
        raise ValueError("steps must be >= 0")
    out = Fraction(1)
    for m in range(steps):
        out *= base + m
    return out


@dataclass(frozen=True)
class ScaledRational:
    """An exact rational times ``sqrt(pi)**sqrtpi_power``.

    Values of equal grade add exactly; adding distinct nonzero grades raises
    :class:`GradeMismatchError` (the sum would leave the graded ring).
    Multiplication adds grades.  Zero is normalised to grade 0 so it is the
    additive identity for every grade.
    """

    coefficient: Fraction
    sqrtpi_power: int = 0

    def __post_init__(self) -> None:
        coeff = Fraction(self.coefficient)
        object.__setattr__(self, "coefficient", coeff)
        if coeff == 0 and self.sqrtpi_power != 0:
            object.__setattr__(self, "sqrtpi_power", 0)

    def _coerce(self, other) -> "ScaledRational":
        if isinstance(other, ScaledRational):
            return other
        if isinstance(other, (int, Fraction)):
            return ScaledRational(Fraction(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.coefficient == 0:
            return other
        if other.coefficient == 0:
            return self
        if self.sqrtpi_power != other.sqrtpi_power:
            raise GradeMismatchError(
                f"cannot add sqrt(pi) grades {self.sqrtpi_power} and {other.sqrtpi_power}"
            )
        return ScaledRational(self.coefficient + other.coefficient, self.sqrtpi_power)

    __radd__ = __add__

    def __neg__(self):
        return ScaledRational(-self.coefficient, self.sqrtpi_power)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ScaledRational(
            self.coefficient * other.coefficient,
            self.sqrtpi_power + other.sqrtpi_power,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.coefficient == 0:
            raise ZeroDivisionError("division by exact zero")
        return ScaledRational(
            self.coefficient / other.coefficient,
            self.sqrtpi_power - other.sqrtpi_power,
        )

    def __bool__(self) -> bool:
        return self.coefficient != 0

    def is_positive(self) -> bool:
        # sqrt(pi)**m > 0, so the sign is the coefficient's sign
        return self.coefficient > 0

    def to_bigfloat(self, precision_bits: int = DEFAULT_PRECISION_BITS) -> mpf:
        _check_precision(precision_bits)
        with mp.workprec(precision_bits + 16):
            value = _fraction_to_mpf(self.coefficient)
            if self.sqrtpi_power:
                value *= mp.sqrt(mp.pi) ** self.sqrtpi_power
        with mp.workprec(precision_bits):
            return +value

    def __str__(self) -> str:
        if self.sqrtpi_power == 0:
            return str(self.coefficient)
        if self.sqrtpi_power == 1:
            suffix = "*sqrt(pi)"
        else:
            suffix = f"*sqrt(pi)^{self.sqrtpi_power}"
        return f"{self.coefficient}{suffix}"


class PiLaurent:
    """A finite formal sum ``sum_m q_m * pi**m`` with exact rational ``q_m``.

    ``m`` ranges over (possibly negative) integers.  Instances are immutable;
    addition and multiplication are exact ring operations, and
    :func:`eval_pilaurent` is the only step that rounds.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[RationalLike, Mapping[int, RationalLike], None] = None):
        if terms is None:
            data = {}
        elif isinstance(terms, (int, Fraction)):
            data = {0: Fraction(terms)}
        else:
            data = {int(m): Fraction(q) for m, q in terms.items()}
        object.__setattr__(self, "_terms", {m: q for m, q in data.items() if q != 0})

    def __setattr__(self, name, value):
        raise AttributeError("PiLaurent is immutable")

    @classmethod
    def pi_power(cls, m: int, coefficient: RationalLike = 1) -> "PiLaurent":
        return cls({m: coefficient})

    @property
    def terms(self) -> dict[int, Fraction]:
        """Copy of the nonzero terms, keyed by pi exponent."""
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, Fraction]]:
        """Nonzero (exponent, coefficient) pairs in ascending exponent order."""
        return iter(sorted(self._terms.items()))

    def is_rational(self) -> bool:
        """True when the value involves no pi at all."""
        return all(m == 0 for m in self._terms)

    def constant_value(self) -> Fraction:
        """The value as an exact rational; raises if any pi power survives."""
        if not self.is_rational():
            raise ValueError(f"{self} is not a pure rational")
        return self._terms.get(0, Fraction(0))

    def _coerce(self, other) -> "PiLaurent":
        if isinstance(other, PiLaurent):
            return other
        if isinstance(other, (int, Fraction)):
            return PiLaurent(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for m, q in other._terms.items():
            out[m] = out.get(m, Fraction(0)) + q
        return PiLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        return PiLaurent({m: -q for m, q in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for ma, qa in self._terms.items():
            for mb, qb in other._terms.items():
                m = ma + mb
                out[m] = out.get(m, Fraction(0)) + qa * qb
        return PiLaurent(out)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, q in self.items():
            mag = str(abs(q)) if m == 0 else f"{abs(q)}*pi^{m}" if m != 1 else f"{abs(q)}*pi"
            if not parts:
                parts.append(mag if q > 0 else f"-{mag}")
            else:
                parts.append(f"+ {mag}" if q > 0 else f"- {mag}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"PiLaurent({dict(sorted(self._terms.items()))!r})"


def _fraction_to_mpf(q: Fraction) -> mpf:
    # exact integers convert losslessly; the single division rounds once
    return mpf(q.numerator) / mpf(q.denominator)


def to_bigfloat(q: RationalLike, precision_bits: int = DEFAULT_PRECISION_BITS) -> mpf:
    """Round an exact rational once, at the requested binary precision."""
    _check_precision(precision_bits)
    with mp.workprec(precision_bits):
        return _fraction_to_mpf(Fraction(q))


def eval_pilaurent(p: PiLaurent, precision_bits: int = DEFAULT_PRECISION_BITS) -> mpf:
    """Evaluate ``sum q_m * pi**m`` numerically.

    pi is taken correctly rounded at the working precision; 16 guard bits
    ahead of the final rounding keep the relative error well inside
    ``2**(8 - precision_bits)`` per term.
    """
    _check_precision(precision_bits)
    with mp.workprec(precision_bits + 16):
        pi_val = +mp.pi
        acc = mpf(0)
        for m, q in p.items():
            acc += _fraction_to_mpf(q) * pi_val**m
    with mp.workprec(precision_bits):
        return +acc


def decimal_str(q: RationalLike, sig_digits: int = 17) -> str:
    """Exact rational -> decimal string with ``sig_digits`` significant digits.

    Rounding is half-to-even at the last kept digit, computed with integer
    arithmetic only.  Trailing zeros are stripped, so values that terminate
    within the budget render exactly ("9/2" -> "4.5").
    """
    if sig_digits < 1:
        raise ValueError("sig_digits must be >= 1")
    q = Fraction(q)
    if q == 0:
        return "0"
    sign = "-" if q < 0 else ""
    a = abs(q)

    # decimal exponent e with 10**e <= a < 10**(e+1), found exactly
    e = len(str(a.numerator)) - len(str(a.denominator))
    while Fraction(10) ** e > a:
        e -= 1
    while Fraction(10) ** (e + 1) <= a:
        e += 1

    shift = sig_digits - 1 - e
    scaled = a.numerator * 10**shift if shift >= 0 else a.numerator
    den = a.denominator if shift >= 0 else a.denominator * 10**(-shift)
    digits, rem = divmod(scaled, den)
    if 2 * rem > den or (2 * rem == den and digits % 2 == 1):
        digits += 1
    if digits >= 10**sig_digits:  # rounding carried into a new leading digit
        digits //= 10
        e += 1

    s = str(digits).rjust(sig_digits, "0")
    if -4 <= e < sig_digits:
        if e >= 0:
            int_part, frac_part = s[: e + 1], s[e + 1 :].rstrip("0")
            body = f"{int_part}.{frac_part}" if frac_part else int_part
        else:
            body = "0." + "0" * (-e - 1) + s.rstrip("0")
        return sign + body
    mantissa = s[0] + ("." + s[1:].rstrip("0") if s[1:].rstrip("0") else "")
    return f"{sign}{mantissa}e{e:+d}"


def mpf_decimal_str(x: mpf, sig_digits: int = 17) -> str:
    """Decimal rendering of an mpmath float at the given significant digits."""
    return nstr(x, sig_digits)
