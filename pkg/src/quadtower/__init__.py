"""Exact arithmetic for biquadratic towers of function fields over finite
fields: quaternion-embedding invariants, regularized orbital distributions
computed by two independent combinatorial routes, toric period integrals of
unramified forms, and the identities tying them together.
"""

__version__ = "1.0.0"
