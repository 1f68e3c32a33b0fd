"""Divisors: finite integer combinations of places of a named curve."""

from __future__ import annotations

from ..errors import CurveMismatch


class Divisor:
    __slots__ = ("curve", "supp", "_hash")

    def __init__(self, curve: str, supp=None):
        self.curve = curve
        clean = {}
        for pl, m in (supp or {}).items():
            if pl.curve != curve:
                raise CurveMismatch(f"place of {pl.curve} in divisor on {curve}")
            if m:
                clean[pl] = int(m)
        self.supp = clean
        self._hash = None

    @staticmethod
    def point(pl, mult=1):
        return Divisor(pl.curve, {pl: mult})

    @staticmethod
    def zero(curve: str):
        return Divisor(curve, {})

    def degree(self) -> int:
        return sum(m * pl.degree for pl, m in self.supp.items())

    def is_effective(self) -> bool:
        return all(m >= 0 for m in self.supp.values())

    def is_zero(self) -> bool:
        return not self.supp

    def mult(self, pl) -> int:
        return self.supp.get(pl, 0)

    def support(self):
        return sorted(self.supp.keys(), key=lambda p: p.sort_key())

    def __add__(self, other):
        self._check(other)
        supp = dict(self.supp)
        for pl, m in other.supp.items():
            supp[pl] = supp.get(pl, 0) + m
        return Divisor(self.curve, supp)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Divisor(self.curve, {pl: -m for pl, m in self.supp.items()})

    def __rmul__(self, n: int):
        return Divisor(self.curve, {pl: n * m for pl, m in self.supp.items()})

    __mul__ = __rmul__

    def __ge__(self, other):
        self._check(other)
        return (self - other).is_effective()

    def _check(self, other):
        if not isinstance(other, Divisor) or other.curve != self.curve:
            raise CurveMismatch("divisor arithmetic across curves")

    def __eq__(self, other):
        return (
            isinstance(other, Divisor)
            and other.curve == self.curve
            and other.supp == self.supp
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.curve, frozenset(self.supp.items())))
        return self._hash

    def items_sorted(self):
        return sorted(self.supp.items(), key=lambda kv: kv[0].sort_key())

    def __repr__(self):
        if not self.supp:
            return f"0[{self.curve}]"
        return " + ".join(f"{m}*({pl!r})" for pl, m in self.items_sorted())


def effective_divisors(curve_obj, degree: int):
    """All effective divisors of the given degree on the curve (exact)."""
    places = [pl for pl in curve_obj.places(degree) if pl.degree <= degree]
    out = []

    def rec(idx, remaining, acc):
        if remaining == 0:
            out.append(Divisor(curve_obj.name, dict(acc)))
            return
        if idx >= len(places):
            return
        pl = places[idx]
        maxm = remaining // pl.degree
        for m in range(maxm, -1, -1):
            if m:
                acc[pl] = m
                rec(idx + 1, remaining - m * pl.degree, acc)
                del acc[pl]
            else:
                rec(idx + 1, remaining, acc)

    rec(0, degree, {})
    return out
