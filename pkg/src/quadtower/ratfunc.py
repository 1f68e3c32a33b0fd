"""Rational functions over a finite field, in canonical form.

Canonical form: numerator and denominator coprime, denominator monic.  This
makes equality and hashing structural.
"""

from __future__ import annotations

from . import fpoly as fp
from .errors import DivisionByZero


class Rat:
    __slots__ = ("k", "num", "den", "_hash")

    def __init__(self, k, num, den=None, _canonical=False):
        self.k = k
        if den is None:
            den = (k.one,)
        if not _canonical:
            num = fp.ptrim(k, num)
            den = fp.ptrim(k, den)
            if not den:
                raise DivisionByZero("zero denominator")
            if not num:
                den = (k.one,)
            else:
                g = fp.pgcd(k, num, den)
                if fp.pdeg(g) > 0:
                    num = fp.pdiv(k, num, g)
                    den = fp.pdiv(k, den, g)
                c = k.inv(den[-1])
                num = fp.pscale(k, num, c)
                den = fp.pscale(k, den, c)
        self.num = tuple(num)
        self.den = tuple(den)
        self._hash = None

    # -- constructors -----------------------------------------------------

    @staticmethod
    def const(k, c):
        return Rat(k, fp.pconst(k, c), (k.one,), _canonical=True)

    @staticmethod
    def zero(k):
        return Rat(k, (), (k.one,), _canonical=True)

    @staticmethod
    def one(k):
        return Rat(k, (k.one,), (k.one,), _canonical=True)

    @staticmethod
    def x(k):
        return Rat(k, (k.zero, k.one), (k.one,), _canonical=True)

    @staticmethod
    def from_int(k, n):
        return Rat.const(k, k.from_int(n))

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return not self.num

    def is_constant(self):
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num[0] if self.num else self.k.zero

    def is_poly(self):
        return len(self.den) == 1

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        k = self.k
        num = fp.padd(k, fp.pmul(k, self.num, other.den), fp.pmul(k, other.num, self.den))
        return Rat(k, num, fp.pmul(k, self.den, other.den))

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Rat(self.k, fp.pneg(self.k, self.num), self.den, _canonical=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        k = self.k
        return Rat(k, fp.pmul(k, self.num, other.num), fp.pmul(k, self.den, other.den))

    def __rmul__(self, other):
        return self.__mul__(other)

    def inv(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero rational function")
        return Rat(self.k, self.den, self.num)

    def __truediv__(self, other):
        return self * self._coerce(other).inv()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        k = self.k
        return Rat(k, fp.ppow(k, self.num, n), fp.ppow(k, self.den, n))

    def _coerce(self, other):
        if isinstance(other, Rat):
            return other
        if isinstance(other, int):
            return Rat.from_int(self.k, other)
        return NotImplemented

    # -- queries -------------------------------------------------------------

    def val_at_poly(self, p):
        """Valuation at the finite place p(x) (monic irreducible)."""
        if self.is_zero():
            raise ValueError("valuation of zero")
        k = self.k
        v = 0
        num = self.num
        while not fp.prem(k, num, p):
            num = fp.pdiv(k, num, p)
            v += 1
        den = self.den
        while not fp.prem(k, den, p):
            den = fp.pdiv(k, den, p)
            v -= 1
        return v

    def val_at_infty(self):
        if self.is_zero():
            raise ValueError("valuation of zero")
        return fp.pdeg(self.den) - fp.pdeg(self.num)

    def eval(self, a):
        """Value at x = a in (an extension of) the coefficient field; a's
        field must contain the image of k's elements verbatim."""
        k = self.k
        d = fp.peval(k, self.den, a)
        if d == k.zero:
            raise DivisionByZero("pole at evaluation point")
        return k.div(fp.peval(k, self.num, a), d)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Rat.from_int(self.k, other)
        if not isinstance(other, Rat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        s = fp.pstr(self.k, self.num)
        if len(self.den) > 1:
            s = f"({s})/({fp.pstr(self.k, self.den)})"
        return s
