"""Exact rational arithmetic primitives shared by every module.

All exact values in this package are ``fractions.Fraction`` instances.  The
class already guarantees the invariants the rest of the code relies on:
results are reduced to lowest terms, the denominator is positive, and zero
is represented as 0/1.  ``ExactRational`` is the name the public API uses
for that type.
"""

from __future__ import annotations

import functools
import math
import re
from fractions import Fraction

__all__ = [
    "ExactRational",
    "beta_even",
    "factorial",
    "format_rational",
    "parse_rational",
]

ExactRational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


@functools.lru_cache(maxsize=None)
def factorial(m: int) -> int:
    """Return m! as an exact integer.

    Memoized on the argument; the cache only ever grows, so concurrent
    readers are safe.  Raises ValueError for negative m.
    """
    if m < 0:
        raise ValueError(f"factorial is undefined for negative m, got {m}")
    return math.factorial(m)


def beta_even(n: int, m: int) -> Fraction:
    """Euler beta function at even integer arguments: B(2n, 2m).

    Evaluates (2n-1)! (2m-1)! / (2n+2m-1)! exactly.  Both arguments must
    be positive integers.
    """
    if n < 1 or m < 1:
        raise ValueError(f"beta_even requires n >= 1 and m >= 1, got n={n}, m={m}")
    return Fraction(factorial(2 * n - 1) * factorial(2 * m - 1), factorial(2 * n + 2 * m - 1))


def format_rational(value: Fraction) -> str:
    """Render an exact rational as ``p/q`` in lowest terms, or ``p`` when q is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse the ``p/q`` (or bare integer) form produced by format_rational.

    Accepts an optional leading sign on the numerator only.  Anything else,
    including a zero denominator, raises ValueError.
    """
    stripped = text.strip()
    if not _RATIONAL_RE.match(stripped):
        raise ValueError(f"not a rational literal: {text!r}")
    try:
        return Fraction(stripped)
    except ZeroDivisionError as exc:
        raise ValueError(f"zero denominator in {text!r}") from exc
