"""Exact Euler zeta values at even arguments, with cross-validating oracles.

zeta_E(2s) = c_s * pi**(2s) with c_s an exact rational, computed by several
recurrences and a Bernoulli closed form that must agree, validated further
by Fourier-coefficient quadrature, enclosed series summation, and exact
triangular solves of the substitution-identity systems.
"""

from .exactmath import (
    DecimalApprox,
    PiPolynomial,
    Rational,
    bernoulli,
    bernoulli_akiyama_tanigawa,
    binomial,
    eval_pi_polynomial,
    factorial,
    falling_factorial,
    pi_decimal,
)
from .fourier import (
    FourierExpansion,
    QuadratureBudgetExceeded,
    fourier_coefficient,
    fourier_coefficient_numeric,
    partial_sum,
)
from .relations import (
    DegenerateSystem,
    Family,
    LinearRelation,
    relation_at,
    solve_triangular,
)
from .zeta import (
    AGREEING_METHODS,
    RECURRENCE_METHODS,
    EulerZetaValue,
    Method,
    euler_zeta,
    euler_zeta_closed_form,
    euler_zeta_coefficients,
    euler_zeta_series,
    leeryoo_constant,
    perm_diff,
    sum_identity_x0_lhs,
    sum_identity_x1_lhs,
    sum_identity_x1_rhs,
    zeta_even_closed_form,
)

__all__ = [
    "AGREEING_METHODS",
    "DecimalApprox",
    "DegenerateSystem",
    "EulerZetaValue",
    "Family",
    "FourierExpansion",
    "LinearRelation",
    "Method",
    "PiPolynomial",
    "QuadratureBudgetExceeded",
    "RECURRENCE_METHODS",
    "Rational",
    "bernoulli",
    "bernoulli_akiyama_tanigawa",
    "binomial",
    "euler_zeta",
    "euler_zeta_closed_form",
    "euler_zeta_coefficients",
    "euler_zeta_series",
    "eval_pi_polynomial",
    "factorial",
    "falling_factorial",
    "fourier_coefficient",
    "fourier_coefficient_numeric",
    "leeryoo_constant",
    "partial_sum",
    "perm_diff",
    "pi_decimal",
    "relation_at",
    "solve_triangular",
    "sum_identity_x0_lhs",
    "sum_identity_x1_lhs",
    "sum_identity_x1_rhs",
    "zeta_even_closed_form",
]

__version__ = "0.1.0"
