"""The quadratic characters chi_1, chi_2 (on divisors of X) and eta (on
divisors of Y3), defined by splitting behaviour in the corresponding double
cover.  All are multiplicative and trivial on principal divisors, which the
tests verify rather than assume.
"""

from __future__ import annotations

from ..errors import CurveMismatch
from .divisors import Divisor


def character_value(cover, place) -> int:
    """+1 if the place of the cover's base splits in the cover, else -1."""
    return 1 if cover.splits(place) else -1


def chi(curves: dict, i: int, D: Divisor) -> int:
    """chi_i(D) for a divisor on X, i in {1, 2}."""
    if D.curve != "X":
        raise CurveMismatch("chi takes divisors on X")
    cover = curves[f"Y{i}"]
    out = 1
    for pl, m in D.supp.items():
        if m % 2:
            out *= character_value(cover, pl)
    return out


def eta(curves: dict, M: Divisor) -> int:
    """eta(M) for a divisor on Y3: splitting in the top cover Y -> Y3."""
    if M.curve != "Y3":
        raise CurveMismatch("eta takes divisors on Y3")
    Y = curves["Y"]
    out = 1
    for w, m in M.supp.items():
        if m % 2:
            out *= character_value(Y, w)
    return out


def eta_place(curves: dict, w) -> int:
    return character_value(curves["Y"], w)
