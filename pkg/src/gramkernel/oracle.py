"""Brute-force ground truth: moment Gram matrices and their exact inverses.

Nothing here knows about orthogonal polynomials.  The Gram matrix comes
straight from weighted monomial moments, and the inverse is computed by
fraction-free (Bareiss) elimination with exact back-substitution, so any
agreement with the closed-form kernel construction is a genuine
cross-validation rather than a shared code path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactscalar import ScaledRational
from .families import Family, monomial_moment
from .kernelbuild import KernelMatrix

Matrix = tuple[tuple[Fraction, ...], ...]


class SingularMatrixError(ArithmeticError):
    """A zero pivot appeared; the input cannot be a valid Gram matrix."""


@dataclass(frozen=True)
class GramMatrix:
    """Moment Gram matrix of a family's monomial basis.

    Hankel-structured (entry (i, j) depends only on i + j) and positive
    definite.  ``sqrtpi_power`` is the global grade: +1 for Hermite, else 0.
    """

    family: Family
    n: int
    entries: Matrix
    sqrtpi_power: int = 0

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij  # 0-based
        return self.entries[i][j]


def gram_from_moments(family: Family, n: int) -> GramMatrix:
    """Entry (i, j) = moment of x**(p_i + p_j) under the family weight."""
    if n < 1:
        raise ValueError("n must be >= 1")
    grade = 1 if family.measure == "hermite" else 0
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            m = monomial_moment(family, family.basis_power(i) + family.basis_power(j))
            if m.coefficient != 0 and m.sqrtpi_power != grade:
                raise AssertionError("moment grade drifted from the family grade")
            row.append(m.coefficient)
        rows.append(tuple(row))
    return GramMatrix(family, n, tuple(rows), grade)


def _forward_eliminate(rows: list[list[Fraction]], width: int) -> list[Fraction]:
    """In-place fraction-free elimination of the first len(rows) columns.

    Uses the one-step Bareiss update, whose intermediate entries are minors
    of the original matrix, so numerators and denominators stay small.  No
    pivoting: indefinite matrices are out of scope and a zero pivot means
    the input was not positive definite.  Returns the pivots, which are
    exactly the leading principal minors.
    """
    n = len(rows)
    prev = Fraction(1)
    pivots: list[Fraction] = []
    for k in range(n):
        pivot = rows[k][k]
        if pivot == 0:
            raise SingularMatrixError(f"zero pivot at elimination step {k + 1}")
        for r in range(k + 1, n):
            factor = rows[r][k]
            for c in range(k + 1, width):
                rows[r][c] = (pivot * rows[r][c] - factor * rows[k][c]) / prev
            rows[r][k] = Fraction(0)
        prev = pivot
        pivots.append(pivot)
    return pivots


def leading_principal_minors(entries: Matrix) -> tuple[Fraction, ...]:
    """All n leading principal minors, exact (the last one is det)."""
    rows = [list(row) for row in entries]
    return tuple(_forward_eliminate(rows, len(rows)))


def bareiss_inverse(entries: Matrix) -> tuple[Matrix, Fraction]:
    """Exact inverse and determinant of a rational matrix.

    Forward pass is fraction-free elimination on the identity-augmented
    matrix; back-substitution on the resulting upper triangle is exact
    rational division.  Raises :class:`SingularMatrixError` on a zero pivot.
    """
    n = len(entries)
    aug = [
        list(row) + [Fraction(1 if r == c else 0) for c in range(n)]
        for r, row in enumerate(entries)
    ]
    pivots = _forward_eliminate(aug, 2 * n)
    det = pivots[-1]

    inv_cols: list[list[Fraction]] = []
    for c in range(n, 2 * n):
        col = [Fraction(0)] * n
        for r in range(n - 1, -1, -1):
            s = aug[r][c]
            for j in range(r + 1, n):
                s -= aug[r][j] * col[j]
            col[r] = s / aug[r][r]
        inv_cols.append(col)
    inverse = tuple(tuple(inv_cols[c][r] for c in range(n)) for r in range(n))
    return inverse, det


def invert_exact(gram: GramMatrix) -> tuple[KernelMatrix, ScaledRational]:
    """Exact inverse of a Gram matrix, with grade and determinant.

    The sqrt(pi) grade factors out of the elimination entirely: the rational
    core is inverted, the inverse carries the negated grade, and the
    determinant carries n times the grade.
    """
    inverse, det = bareiss_inverse(gram.entries)
    kernel = KernelMatrix(gram.family, gram.n, inverse, -gram.sqrtpi_power)
    determinant = ScaledRational(det, gram.n * gram.sqrtpi_power)
    return kernel, determinant
