"""Curves of the tower: places, divisors, Riemann-Roch, Picard groups,
quadratic characters."""

from .cover import DoubleCover, tower_curves
from .divisors import Divisor, effective_divisors
from .picard import PicElement, PicGroup, PicQuotient, pic_quotient_reps
from .places import CurveX
from .rr import rr_basis, rr_dim

__all__ = [
    "CurveX",
    "Divisor",
    "DoubleCover",
    "PicElement",
    "PicGroup",
    "PicQuotient",
    "effective_divisors",
    "pic_quotient_reps",
    "rr_basis",
    "rr_dim",
    "tower_curves",
]
