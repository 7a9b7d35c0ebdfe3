"""Truncated evaluation of the Gamma-family expansions.

The exact coefficients from ``sequences`` feed expansions of Gamma,
digamma, polygamma, and the Hurwitz zeta function.  The a_n grow
factorially, so the Gamma and digamma series are asymptotic: they are
never summed "to convergence".  Every evaluator cuts off after a
caller-chosen number of terms and reports the magnitude of the first
omitted term as the error estimate, alongside an independently computed
reference value where one is available.

All floating arithmetic is mpmath at the caller's working precision plus
guard digits; exact rationals are converted at the last moment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import mpmath
from mpmath import mp

from .constants import EULER_MASCHERONI_40, PI_40
from .exactnum import factorial
from .sequences import a_from_kb, f_of, g_closed

__all__ = [
    "EvalReport",
    "TruncationParams",
    "check_ln_pi_over_e",
    "eval_digamma",
    "eval_gamma",
    "eval_hurwitz_expansion",
    "eval_polygamma",
    "p_term",
    "zeta_direct",
]

Real = Union[int, float, str, Fraction, mpmath.mpf]

# Extra digits carried internally so that rounding in the working context
# never shows up at the reported precision.
_GUARD_DIGITS = 10

# References are computed this many digits beyond the omitted-term bounds
# they are compared against; 4 keeps them out of the error budget.
_REFERENCE_MARGIN = 4


@dataclass(frozen=True)
class TruncationParams:
    """How deep to sum and at what precision.

    ``terms`` may be 0: the expansions all have a closed leading part, and
    a zero-term evaluation reports that part alone with the first series
    term as its bound.
    """

    terms: int
    working_precision: int = 34

    def __post_init__(self) -> None:
        if self.terms < 0:
            raise ValueError(f"terms must be >= 0, got {self.terms}")
        if self.working_precision < 15:
            raise ValueError(
                f"working_precision must be >= 15, got {self.working_precision}"
            )


@dataclass(frozen=True)
class EvalReport:
    """Outcome of one truncated evaluation.

    ``first_omitted_term_bound`` is the magnitude of the first term the
    truncation dropped; for the multiplicative Gamma form it bounds the
    relative error, for the additive series the absolute error.
    ``reference`` is None when no independent value is defined for the
    inputs, and ``abs_error`` is |value - reference| otherwise.
    """

    value: mpmath.mpf
    terms_used: int
    first_omitted_term_bound: mpmath.mpf
    reference: Optional[mpmath.mpf] = None
    abs_error: Optional[mpmath.mpf] = None


def _report(
    value: mpmath.mpf,
    terms_used: int,
    bound: mpmath.mpf,
    reference: Optional[mpmath.mpf],
) -> EvalReport:
    error = abs(value - reference) if reference is not None else None
    return EvalReport(value, terms_used, bound, reference, error)


def _as_mpf(x: Real) -> mpmath.mpf:
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / x.denominator
    return mp.mpf(x)


def _frac(value: Fraction) -> mpmath.mpf:
    return mp.mpf(value.numerator) / value.denominator


def p_term(m: int, x: Real, working_precision: int = 34) -> mpmath.mpf:
    """Leading expansion term 1 / ((2m-1) (x+1/2)^(2m-1)).

    Requires m >= 1 and x > -1/2 (the power base must stay positive).
    """
    if m < 1:
        raise ValueError(f"p_term requires m >= 1, got {m}")
    with mp.workdps(working_precision + _GUARD_DIGITS):
        xm = _as_mpf(x)
        if not xm > mp.mpf(-1) / 2:
            raise ValueError(f"p_term requires x > -1/2, got {x}")
        base = xm + mp.mpf(1) / 2
        return 1 / ((2 * m - 1) * base ** (2 * m - 1))


# Euler-Maclaurin corrections B_2 .. B_8 hard-coded on purpose: the direct
# zeta evaluator is the reference the kernel-derived expansions are judged
# against, so it must not read those expansions' own Bernoulli pipeline.
_EM_CORRECTIONS = (Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30))
_EM_NEXT = Fraction(5, 66)  # B_10, the first omitted correction


def _zeta_term_count(s: float, q: float, tol: float) -> int:
    # Smallest N with B_10/10! * s(s+1)...(s+8) * (N+q)^(-s-9) <= tol.
    lncoef = (
        math.log(float(_EM_NEXT))
        - math.lgamma(11)
        + sum(math.log(s + i) for i in range(9))
    )
    needed = math.exp((lncoef - math.log(tol)) / (s + 9)) - q
    return max(1, math.ceil(needed))


def zeta_direct(s: Real, q: Real, tol: float) -> mpmath.mpf:
    """Hurwitz zeta sum_{n>=0} (n+q)^(-s) for s > 1, q > 0, to within tol.

    Sums N explicit terms, then corrects with the integral tail
    (N+q)^(1-s)/(s-1) plus Euler-Maclaurin terms through B_8.  N is chosen
    so the first omitted correction (the B_10 term) is below tol; since
    t -> (q+t)^(-s) is completely monotone, the true remainder is bounded
    by that omitted term.  Term count stays in the hundreds even for
    tolerances near 1e-36.
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    dps = max(25, math.ceil(-math.log10(tol)) + _GUARD_DIGITS)
    with mp.workdps(dps):
        sm = _as_mpf(s)
        qm = _as_mpf(q)
        if not sm > 1:
            raise ValueError(f"zeta_direct requires s > 1, got {s}")
        if not qm > 0:
            raise ValueError(f"zeta_direct requires q > 0, got {q}")
        n_terms = _zeta_term_count(float(sm), float(qm), tol)
        total = mp.fsum((qm + n) ** (-sm) for n in range(n_terms))
        edge = qm + n_terms
        total += edge ** (1 - sm) / (sm - 1)
        total += edge ** (-sm) / 2
        rising = sm  # s(s+1)...(s+2k-2), maintained across k
        for k, b2k in enumerate(_EM_CORRECTIONS, start=1):
            total += _frac(b2k) / factorial(2 * k) * rising * edge ** (-sm - 2 * k + 1)
            rising *= (sm + 2 * k - 1) * (sm + 2 * k)
        return total


def eval_hurwitz_expansion(m0: int, x: Real, params: TruncationParams) -> EvalReport:
    """Expansion of zeta(2*m0, x+1) in powers of (x+1/2), truncated.

    value = p_term(m0, x) + sum_{z=1}^{N} g_closed(z, m0) / ((2m0+2z-1)
    (x+1/2)^(2m0+2z-1)); the reference is the direct tail-corrected sum.
    """
    if m0 < 1:
        raise ValueError(f"eval_hurwitz_expansion requires m0 >= 1, got {m0}")
    wp = params.working_precision
    with mp.workdps(wp + _GUARD_DIGITS):
        xm = _as_mpf(x)
        value = p_term(m0, xm, wp)
        base = xm + mp.mpf(1) / 2

        def z_term(z: int) -> mpmath.mpf:
            power = 2 * m0 + 2 * z - 1
            return _frac(g_closed(z, m0)) / (power * base**power)

        for z in range(1, params.terms + 1):
            value += z_term(z)
        bound = abs(z_term(params.terms + 1))
        reference = zeta_direct(2 * m0, xm + 1, 10.0 ** -(wp - _REFERENCE_MARGIN))
        return _report(value, params.terms, bound, reference)


def eval_gamma(x: Real, params: TruncationParams) -> EvalReport:
    """Gamma(x + 1/2) = (x/e)^x sqrt(2 pi) exp(-sum a_n/((2n-1) x^(2n-1))).

    Requires x > 0.  The omitted-term bound lives inside the exponent, so
    it bounds the relative error of the product form.  The reference is an
    independent high-precision Gamma.
    """
    wp = params.working_precision
    with mp.workdps(wp + _GUARD_DIGITS):
        xm = _as_mpf(x)
        if not xm > 0:
            raise ValueError(f"eval_gamma requires x > 0, got {x}")

        def exponent_term(n: int) -> mpmath.mpf:
            return _frac(a_from_kb(n)) / ((2 * n - 1) * xm ** (2 * n - 1))

        exponent = mp.fsum(exponent_term(n) for n in range(1, params.terms + 1))
        value = mp.exp(xm * mp.log(xm) - xm - exponent) * mp.sqrt(2 * _pinned_pi())
        bound = abs(exponent_term(params.terms + 1))
        reference = mpmath.gamma(xm + mp.mpf(1) / 2)
        return _report(value, params.terms, bound, reference)


def eval_digamma(x: Real, params: TruncationParams) -> EvalReport:
    """psi(x + 1) = ln(x + 1/2) + sum a_n / (x + 1/2)^(2n), truncated.

    Requires x > -1/2.  For non-negative integer x the reference is the
    exact harmonic number H_x minus the pinned Euler-Mascheroni constant;
    for other x no independent reference is reported.
    """
    wp = params.working_precision
    with mp.workdps(wp + _GUARD_DIGITS):
        xm = _as_mpf(x)
        if not xm > mp.mpf(-1) / 2:
            raise ValueError(f"eval_digamma requires x > -1/2, got {x}")
        base = xm + mp.mpf(1) / 2

        def series_term(n: int) -> mpmath.mpf:
            return _frac(a_from_kb(n)) * base ** (-2 * n)

        value = mp.log(base) + mp.fsum(series_term(n) for n in range(1, params.terms + 1))
        bound = abs(series_term(params.terms + 1))
        reference = None
        if mp.isint(xm) and xm >= 0:
            harmonic = sum((Fraction(1, k) for k in range(1, int(xm) + 1)), Fraction(0))
            reference = _frac(harmonic) - mp.mpf(EULER_MASCHERONI_40)
        return _report(value, params.terms, bound, reference)


def eval_polygamma(y: int, x: Real, params: TruncationParams) -> EvalReport:
    """Order-y polygamma psi^(y)(x + 1) via the f-weighted zeta series.

    value = (-1)^(y-1) [ (y-1)!/(x+1/2)^y
                         - sum_{n=1}^{N} f(n) (2n+y)!/(2n-1)! zeta(2n+y+1, x+1) ],
    with the inner zeta values from zeta_direct.  The identity
    psi^(y)(x+1) = (-1)^(y-1) y! zeta(y+1, x+1) supplies the reference.
    Requires y >= 1 and x > -1/2.
    """
    if y < 1:
        raise ValueError(f"eval_polygamma requires y >= 1, got {y}")
    wp = params.working_precision
    inner_tol = 10.0 ** -(wp + 2)
    with mp.workdps(wp + _GUARD_DIGITS):
        xm = _as_mpf(x)
        if not xm > mp.mpf(-1) / 2:
            raise ValueError(f"eval_polygamma requires x > -1/2, got {x}")
        base = xm + mp.mpf(1) / 2
        sign = 1 if y % 2 else -1

        def series_term(n: int) -> mpmath.mpf:
            weight = _frac(f_of(n)) * (factorial(2 * n + y) // factorial(2 * n - 1))
            return weight * zeta_direct(2 * n + y + 1, xm + 1, inner_tol)

        series = mp.fsum(series_term(n) for n in range(1, params.terms + 1))
        value = sign * (factorial(y - 1) / base**y - series)
        bound = abs(series_term(params.terms + 1))
        reference = sign * factorial(y) * zeta_direct(y + 1, xm + 1, inner_tol)
        return _report(value, params.terms, bound, reference)


def check_ln_pi_over_e(terms: int, working_precision: int = 34) -> EvalReport:
    """Partial sum of sum_{j>=1} zeta(2j) f(j), which converges to (ln pi - 1)/2.

    The terms decay like 4^(-j), so this series genuinely converges; the
    report's bound is the first omitted term and the reference is
    (ln pi - 1)/2 from the pinned constant.
    """
    if terms < 1:
        raise ValueError(f"check_ln_pi_over_e requires terms >= 1, got {terms}")
    inner_tol = 10.0 ** -(working_precision + 2)
    with mp.workdps(working_precision + _GUARD_DIGITS):

        def series_term(j: int) -> mpmath.mpf:
            return zeta_direct(2 * j, 1, inner_tol) * _frac(f_of(j))

        value = mp.fsum(series_term(j) for j in range(1, terms + 1))
        bound = series_term(terms + 1)
        reference = (mp.log(_pinned_pi()) - 1) / 2
        return _report(value, terms, bound, reference)


def _pinned_pi() -> mpmath.mpf:
    return mp.mpf(PI_40)
