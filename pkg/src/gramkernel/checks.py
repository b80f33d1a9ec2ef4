"""Self-verification suites: every structural identity the construction owes.

Each check is exact (rational equality, no tolerances) and pits two
independent routes against each other -- closed-form kernel vs. Bareiss
inverse, expansion matrix vs. moment Gram, projection vs. identity.  The
CLI ``verify`` subcommand runs all of them over every family and size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .approx import monomial_moment_vector, project
from .families import ALL_FAMILIES, Family, coeff_matrix, norm_vector
from .kernelbuild import KernelMatrix, build_kernel
from .oracle import gram_from_moments, invert_exact, leading_principal_minors


@dataclass(frozen=True)
class CheckResult:
    name: str
    family: str
    size: int
    passed: bool
    detail: str = ""


def _identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]


def _matmul(a, b) -> list[list[Fraction]]:
    n, m, p = len(a), len(b), len(b[0])
    return [
        [sum((a[i][k] * b[k][j] for k in range(m)), Fraction(0)) for j in range(p)]
        for i in range(n)
    ]


def check_oracle_equivalence(
    family: Family, n: int, corrupt: bool = False
) -> CheckResult:
    """Closed-form kernel == exact Bareiss inverse of the moment Gram."""
    kernel = build_kernel(family, n)
    if corrupt:
        rows = [list(r) for r in kernel.entries]
        rows[0][0] += Fraction(1, 7)
        kernel = KernelMatrix(family, n, tuple(tuple(r) for r in rows), kernel.sqrtpi_power)
    gram = gram_from_moments(family, n)
    inverse, _ = invert_exact(gram)
    ok = kernel.entries == inverse.entries and kernel.sqrtpi_power == inverse.sqrtpi_power
    detail = "" if ok else "kernel differs from the exact Gram inverse"
    return CheckResult("oracle-equivalence", family.name, n, ok, detail)


def check_gram_kernel_identity(family: Family, n: int) -> CheckResult:
    """G * B == I exactly (the sqrt(pi) grades cancel)."""
    gram = gram_from_moments(family, n)
    kernel = build_kernel(family, n)
    ok = (
        gram.sqrtpi_power + kernel.sqrtpi_power == 0
        and _matmul(gram.entries, kernel.entries) == _identity(n)
    )
    return CheckResult("gram-kernel-identity", family.name, n, ok)


def check_orthogonality(family: Family, n: int) -> CheckResult:
    """A * G * A^T is exactly diagonal with the true norms on the diagonal."""
    a = coeff_matrix(family, n)
    gram = gram_from_moments(family, n)
    norms = norm_vector(family, n)
    prod = _matmul(_matmul(a.entries, gram.entries), list(zip(*a.entries)))
    ok = True
    for i in range(n):
        for j in range(n):
            want = norms[i].coefficient if i == j else Fraction(0)
            if prod[i][j] != want:
                ok = False
    if ok:
        ok = all(v.sqrtpi_power == gram.sqrtpi_power for v in norms)
    return CheckResult("orthogonality", family.name, n, ok)


def check_determinant_identity(family: Family, n: int) -> CheckResult:
    """prod(lambda_i) == det(A)**2 * det(G), exactly, grade included."""
    a = coeff_matrix(family, n)
    norms = norm_vector(family, n)
    _, det_g = invert_exact(gram_from_moments(family, n))
    det_a = Fraction(1)
    for i in range(n):
        det_a *= a.entries[i][i]  # triangular
    prod_coeff = Fraction(1)
    prod_grade = 0
    for v in norms:
        prod_coeff *= v.coefficient
        prod_grade += v.sqrtpi_power
    ok = (
        prod_coeff == det_a**2 * det_g.coefficient
        and prod_grade == det_g.sqrtpi_power
    )
    return CheckResult("determinant-identity", family.name, n, ok)


def check_kernel_shape(family: Family, n: int) -> CheckResult:
    """Kernel symmetry plus exact positive definiteness (all minors > 0)."""
    kernel = build_kernel(family, n)
    sym = all(
        kernel.entries[i][j] == kernel.entries[j][i]
        for i in range(n)
        for j in range(i)
    )
    minors = leading_principal_minors(kernel.entries)
    ok = sym and all(m > 0 for m in minors)
    return CheckResult("kernel-symmetry-pd", family.name, n, ok)


def check_gram_hankel(family: Family, n: int) -> CheckResult:
    """Gram entries are constant along anti-diagonals."""
    gram = gram_from_moments(family, n)
    ok = all(
        gram.entries[i][j] == gram.entries[i - 1][j + 1]
        for i in range(1, n)
        for j in range(n - 1)
    )
    return CheckResult("gram-hankel", family.name, n, ok)


def check_det_product(family: Family, n: int) -> CheckResult:
    """det(G) * det(B) == 1 with grades cancelling."""
    gram = gram_from_moments(family, n)
    kernel = build_kernel(family, n)
    _, det_g = invert_exact(gram)
    det_b = leading_principal_minors(kernel.entries)[-1]
    ok = (
        det_g.coefficient * det_b == 1
        and det_g.sqrtpi_power + kernel.sqrtpi_power * n == 0
    )
    return CheckResult("det-product", family.name, n, ok)


def check_reproducing(family: Family, n: int) -> CheckResult:
    """Projecting each in-span monomial returns exactly that monomial."""
    kernel = build_kernel(family, n)
    ok = True
    for k in range(1, n + 1):
        moments = monomial_moment_vector(family, n, family.basis_power(k))
        estimate = project(kernel, moments)
        for i, c in enumerate(estimate.coefficients, start=1):
            want = Fraction(1 if i == k else 0)
            if not c.is_rational() or c.constant_value() != want:
                ok = False
    return CheckResult("reproducing-property", family.name, n, ok)


_CHECKS = (
    check_oracle_equivalence,
    check_gram_kernel_identity,
    check_orthogonality,
    check_determinant_identity,
    check_kernel_shape,
    check_gram_hankel,
    check_det_product,
    check_reproducing,
)


def run_checks(
    max_size: int,
    families: Sequence[Family] = ALL_FAMILIES,
    inject_corruption: bool = False,
) -> list[CheckResult]:
    """Run every check for every family and size 1..max_size.

    ``inject_corruption`` perturbs one kernel entry inside the
    oracle-equivalence check; the resulting failures are the negative
    control proving the harness can fail.
    """
    if max_size < 1:
        raise ValueError("max_size must be >= 1")
    results = []
    for family in families:
        for n in range(1, max_size + 1):
            for check in _CHECKS:
                if check is check_oracle_equivalence:
                    results.append(check(family, n, corrupt=inject_corruption))
                else:
                    results.append(check(family, n))
    return results
