"""Pinned decimal constants.

These are inputs, never computed here.  Each string holds the first 40
decimal digits after truncation (not rounding) of the published expansion:
pi from the OEIS A000796 digit list, the Euler-Mascheroni constant gamma
from OEIS A001620.  Forty digits comfortably exceed the 34-digit default
working precision of the evaluators, so truncation error in the constants
never limits a comparison.
"""

from __future__ import annotations

__all__ = ["EULER_MASCHERONI_40", "PI_40"]

PI_40 = "3.1415926535897932384626433832795028841971"

EULER_MASCHERONI_40 = "0.5772156649015328606065120900824024310421"
