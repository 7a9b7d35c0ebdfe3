"""Exact kernel arithmetic for Bernoulli and Euler numbers.

Two rational kernel sequences, computable by recursion, by a signed sum
over integer compositions, and by a Hessenberg determinant, scale directly
to the Bernoulli and Euler numbers and to the coefficients of asymptotic
expansions of Gamma, digamma, polygamma, and Hurwitz zeta.  The exact
layer (``exactnum``, ``compositions``, ``kernels``, ``sequences``,
``oracles``) works entirely in rationals; ``specfun`` converts to
high-precision floats only at evaluation time; ``cli`` exposes both.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .compositions import Composition, compositions, count
from .exactnum import (
    ExactRational,
    beta_even,
    factorial,
    format_rational,
    parse_rational,
)
from .kernels import (
    BRUTE_FORCE_SOFT_LIMIT,
    KernelCache,
    KernelKind,
    kernel_compositions,
    kernel_determinant,
    kernel_recursive,
)
from .sequences import (
    CoefficientTable,
    Provenance,
    TProductTerm,
    a_from_bernoulli,
    a_from_kb,
    a_recursive,
    bernoulli,
    coefficient_table,
    euler,
    f_of,
    faulhaber_check,
    g_bruteforce,
    g_closed,
    j_of,
    t_product_terms,
)
from .specfun import (
    EvalReport,
    TruncationParams,
    check_ln_pi_over_e,
    eval_digamma,
    eval_gamma,
    eval_hurwitz_expansion,
    eval_polygamma,
    p_term,
    zeta_direct,
)

__all__ = [
    "BRUTE_FORCE_SOFT_LIMIT",
    "CoefficientTable",
    "Composition",
    "EvalReport",
    "ExactRational",
    "KernelCache",
    "KernelKind",
    "Provenance",
    "TProductTerm",
    "TruncationParams",
    "__version__",
    "a_from_bernoulli",
    "a_from_kb",
    "a_recursive",
    "bernoulli",
    "beta_even",
    "check_ln_pi_over_e",
    "coefficient_table",
    "compositions",
    "count",
    "euler",
    "eval_digamma",
    "eval_gamma",
    "eval_hurwitz_expansion",
    "eval_polygamma",
    "f_of",
    "factorial",
    "faulhaber_check",
    "format_rational",
    "g_bruteforce",
    "g_closed",
    "j_of",
    "kernel_compositions",
    "kernel_determinant",
    "kernel_recursive",
    "p_term",
    "parse_rational",
    "t_product_terms",
    "zeta_direct",
]
