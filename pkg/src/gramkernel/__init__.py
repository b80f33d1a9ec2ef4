"""gramkernel: exact reproducing-kernel polynomial approximation.

Builds the inverse of monomial Gram matrices in closed form over the three
classical weighted domains (Legendre, Laguerre, Hermite; the symmetric ones
split by parity), evaluates the resulting reproducing kernels, conditions
the Gram systems, and projects target functions onto the kernel span -- all
in exact rational / sqrt(pi)-graded / pi-Laurent arithmetic, with numeric
rendering deferred to a single high-precision step.
"""

from .approx import (
    ApproxPolynomial,
    COS_PI,
    EXP_NEG,
    MomentVector,
    SIN_PI,
    TARGETS,
    TargetFunction,
    error_variance,
    eval_polynomial,
    function_moments,
    monomial_moment_vector,
    project,
    target_by_name,
    taylor_comparator,
    taylor_polynomial,
)
from .checks import CheckResult, run_checks
from .conditioning import (
    ConditionReport,
    ConditionRow,
    condition_number,
    condition_table,
    inf_norm,
)
from .exactscalar import (
    DEFAULT_PRECISION_BITS,
    GradeMismatchError,
    PiLaurent,
    ScaledRational,
    decimal_str,
    eval_pilaurent,
    gamma_ratio,
    to_bigfloat,
)
from .families import (
    ALL_FAMILIES,
    CoeffMatrix,
    FAMILIES,
    Family,
    HERMITE_EVEN,
    HERMITE_ODD,
    LAGUERRE,
    LEGENDRE_EVEN,
    LEGENDRE_ODD,
    coeff_matrix,
    family_by_name,
    monomial_moment,
    norm_vector,
    printed_legendre_norm,
)
from .kernelbuild import KernelMatrix, build_kernel, closed_form_kernel, kernel_eval
from .oracle import (
    GramMatrix,
    SingularMatrixError,
    bareiss_inverse,
    gram_from_moments,
    invert_exact,
    leading_principal_minors,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_FAMILIES",
    "ApproxPolynomial",
    "COS_PI",
    "CheckResult",
    "CoeffMatrix",
    "ConditionReport",
    "ConditionRow",
    "DEFAULT_PRECISION_BITS",
    "EXP_NEG",
    "FAMILIES",
    "Family",
    "GradeMismatchError",
    "GramMatrix",
    "HERMITE_EVEN",
    "HERMITE_ODD",
    "KernelMatrix",
    "LAGUERRE",
    "LEGENDRE_EVEN",
    "LEGENDRE_ODD",
    "MomentVector",
    "PiLaurent",
    "SIN_PI",
    "ScaledRational",
    "SingularMatrixError",
    "TARGETS",
    "TargetFunction",
    "bareiss_inverse",
    "build_kernel",
    "closed_form_kernel",
    "coeff_matrix",
    "condition_number",
    "condition_table",
    "decimal_str",
    "error_variance",
    "eval_pilaurent",
    "eval_polynomial",
    "family_by_name",
    "function_moments",
    "gamma_ratio",
    "gram_from_moments",
    "inf_norm",
    "invert_exact",
    "kernel_eval",
    "leading_principal_minors",
    "monomial_moment",
    "monomial_moment_vector",
    "norm_vector",
    "printed_legendre_norm",
    "project",
    "run_checks",
    "target_by_name",
    "taylor_comparator",
    "taylor_polynomial",
    "to_bigfloat",
]
