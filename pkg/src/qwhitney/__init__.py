"""Exact q-analogue Whitney, Whitney-Lah and Dowling number families.

Everything is computed in exact arithmetic: triangle entries are Laurent
polynomials in q over arbitrary-precision integers, generating-function
identities are finite polynomial equalities in the formal variable
u (the bracket of t), and the audit subpackage re-derives every entry
along independent routes and reports exact matches or counterexamples.
"""

from .qalg import (
    EvalAtZeroError,
    LaurentPoly,
    NonDivisibleError,
    ONE,
    Q,
    ZERO,
    lp_eval,
    lp_exact_div,
    lp_mul,
    q_binomial_base,
    q_bracket,
    q_factorial_base,
    q_power,
)
from .upoly import (
    NonUnitConstantTermError,
    TruncSeries,
    UPoly,
    bracket_linear,
    falling_factorial_u,
    rising_factorial_u,
    upoly_coeff,
    useries_inverse,
)
from .triangles import (
    CacheInvalidError,
    FamilyId,
    InverseMatrix,
    NonUnitDiagonalError,
    Params,
    Triangle,
    dowling,
    get_triangle,
    invert_unit_triangular,
    lah,
    lah_row_sum,
    load_rows,
    rows_for,
    save_rows,
    whitney1_falling,
    whitney1_rising,
    whitney2,
    whitney2_scaled,
    whitney2_verbatim,
)
from .formulas import (
    Variant,
    dowling_qi,
    lah_egf_coeff,
    lah_explicit,
    lah_horizontal,
    lah_vertical,
    lah_via_composition,
    newton_lah_coefficients,
    q_difference,
    whitney2_egf_coeff,
    whitney2_explicit,
    whitney2_horizontal,
    whitney2_rational_gf,
    whitney2_vertical,
    whitney_from_lah,
)
from .audit import (
    AuditReport,
    CheckResult,
    Counterexample,
    DEFAULT_GRID,
    ParamGrid,
    REGISTRY,
    UnknownCheckIdError,
    classical_limit_check,
    run_all,
    run_check,
)

__all__ = [
    "AuditReport",
    "CacheInvalidError",
    "CheckResult",
    "Counterexample",
    "DEFAULT_GRID",
    "EvalAtZeroError",
    "FamilyId",
    "InverseMatrix",
    "LaurentPoly",
    "NonDivisibleError",
    "NonUnitConstantTermError",
    "NonUnitDiagonalError",
    "ONE",
    "Params",
    "ParamGrid",
    "Q",
    "REGISTRY",
    "Triangle",
    "TruncSeries",
    "UPoly",
    "UnknownCheckIdError",
    "Variant",
    "ZERO",
    "bracket_linear",
    "classical_limit_check",
    "dowling",
    "dowling_qi",
    "falling_factorial_u",
    "get_triangle",
    "invert_unit_triangular",
    "lah",
    "lah_egf_coeff",
    "lah_explicit",
    "lah_horizontal",
    "lah_row_sum",
    "lah_vertical",
    "lah_via_composition",
    "load_rows",
    "lp_eval",
    "lp_exact_div",
    "lp_mul",
    "newton_lah_coefficients",
    "q_binomial_base",
    "q_bracket",
    "q_difference",
    "q_factorial_base",
    "q_power",
    "rising_factorial_u",
    "rows_for",
    "run_all",
    "run_check",
    "save_rows",
    "upoly_coeff",
    "useries_inverse",
    "whitney1_falling",
    "whitney1_rising",
    "whitney2",
    "whitney2_egf_coeff",
    "whitney2_explicit",
    "whitney2_horizontal",
    "whitney2_rational_gf",
    "whitney2_scaled",
    "whitney2_verbatim",
    "whitney2_vertical",
    "whitney_from_lah",
]

__version__ = "0.1.0"
