"""The fixed biquadratic tower of function fields.

The base curve is X : y^2 = x(x-1)(x-lambda) over F_q (q odd), with full
rational 2-torsion.  F = k(X) is represented as k(x) + k(x)*y.  The three
quadratic extensions are generated by square roots s1, s2 of u1 = x - e1,
u2 = x - e2, and s3 := s1*s2 with s3^2 = u3 = u1*u2.  K = F(s1, s2) has
F-basis (1, s1, s2, s1*s2).

All arithmetic is exact and every value is immutable after construction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import fpoly as fp
from .errors import ConfigError, DivisionByZero, LevelMismatch
from .ffield import GF, ExtField
from .ratfunc import Rat

LEVELS = ("F", "K1", "K2", "K3", "K")
_LEVEL_DIM = {"F": 1, "K1": 2, "K2": 2, "K3": 2, "K": 4}
# which tower levels each level is contained in
_CONTAINED_IN = {
    "F": {"F", "K1", "K2", "K3", "K"},
    "K1": {"K1", "K"},
    "K2": {"K2", "K"},
    "K3": {"K3", "K"},
    "K": {"K"},
}


def _coerce_field_elt(k, v):
    """Read a field element from an int or coefficient list."""
    if isinstance(v, int):
        return k.from_int(v)
    if isinstance(v, (list, tuple)):
        if isinstance(k, ExtField):
            base = k.base
            coeffs = [base.from_int(c) for c in v]
            coeffs += [base.zero] * (k.deg - len(coeffs))
            return tuple(coeffs)
        if len(v) == 1:
            return k.from_int(v[0])
    raise ConfigError(f"cannot read field element from {v!r}")


def _field_elt_json(k, v):
    if isinstance(k, ExtField):
        return list(v)
    return v


@dataclass(frozen=True)
class CurveConfig:
    """Defining data of the tower, as carried by configuration files."""

    q: int
    lam: object
    e1: object
    e2: object
    degree_bound: int = 3

    @staticmethod
    def from_dict(d) -> "CurveConfig":
        try:
            q = int(d["q"])
            lam = d["lambda"]
            e1 = d["e1"]
            e2 = d["e2"]
        except KeyError as exc:
            raise ConfigError(f"missing config key {exc}") from None
        bound = int(d.get("degree_bound", 3))
        if bound < 1:
            raise ConfigError("degree_bound must be positive")
        return CurveConfig(q=q, lam=lam, e1=e1, e2=e2, degree_bound=bound)

    @staticmethod
    def from_json(text: str) -> "CurveConfig":
        return CurveConfig.from_dict(json.loads(text))

    def to_dict(self):
        return {
            "q": self.q,
            "lambda": self.lam,
            "e1": self.e1,
            "e2": self.e2,
            "degree_bound": self.degree_bound,
        }


class Tower:
    """All fixed data derived from a CurveConfig, plus element constructors."""

    def __init__(self, cfg: CurveConfig):
        self.cfg = cfg
        if cfg.q % 2 == 0:
            raise ConfigError("q must be odd")
        self.k = GF(cfg.q)
        k = self.k
        lam = _coerce_field_elt(k, cfg.lam)
        if lam in (k.zero, k.one):
            raise ConfigError("lambda must avoid 0 and 1")
        self.lam = lam
        roots = (k.zero, k.one, lam)
        e1 = _coerce_field_elt(k, cfg.e1)
        e2 = _coerce_field_elt(k, cfg.e2)
        if e1 not in roots or e2 not in roots or e1 == e2:
            raise ConfigError("e1, e2 must be distinct members of {0, 1, lambda}")
        self.e1, self.e2 = e1, e2
        (self.e3,) = [r for r in roots if r not in (e1, e2)]
        self.roots = roots
        # f = x(x-1)(x-lam), u_i = x - e_i, u3 = u1*u2
        xpoly = (k.zero, k.one)
        f = (k.one,)
        for r in roots:
            f = fp.pmul(k, f, fp.psub(k, xpoly, fp.pconst(k, r)))
        self.fpoly = f
        self.u1poly = fp.psub(k, xpoly, fp.pconst(k, e1))
        self.u2poly = fp.psub(k, xpoly, fp.pconst(k, e2))
        self.u3poly = fp.pmul(k, self.u1poly, self.u2poly)
        # cached element views
        self.f = self.felt(Rat(k, f), Rat.zero(k))
        self.x = self.felt(Rat.x(k), Rat.zero(k))
        self.y = self.felt(Rat.zero(k), Rat.one(k))
        self.u1 = self.felt(Rat(k, self.u1poly), Rat.zero(k))
        self.u2 = self.felt(Rat(k, self.u2poly), Rat.zero(k))
        self.u3 = self.felt(Rat(k, self.u3poly), Rat.zero(k))
        self.zero = self.felt(Rat.zero(k), Rat.zero(k))
        self.one = self.felt(Rat.one(k), Rat.zero(k))
        self.half = self.one / 2

    # -- element constructors ------------------------------------------------

    def felt(self, a, b=None) -> "FElt":
        if isinstance(a, FElt):
            return a
        if isinstance(a, int):
            a = Rat.from_int(self.k, a)
        if b is None:
            b = Rat.zero(self.k)
        elif isinstance(b, int):
            b = Rat.from_int(self.k, b)
        return FElt(self, a, b)

    def telt(self, level, coords) -> "TElt":
        coords = tuple(self.felt(c) for c in coords)
        if len(coords) != _LEVEL_DIM[level]:
            raise LevelMismatch(f"level {level} needs {_LEVEL_DIM[level]} coordinates")
        return TElt(self, level, coords)

    def s(self, i: int) -> "TElt":
        """The generator s_i of K_i over F."""
        if i == 1:
            return self.telt("K1", (self.zero, self.one))
        if i == 2:
            return self.telt("K2", (self.zero, self.one))
        if i == 3:
            return self.telt("K3", (self.zero, self.one))
        raise ValueError("i must be 1, 2 or 3")

    def t_f(self, z) -> "TElt":
        """An F element viewed at level F of the tower."""
        return self.telt("F", (self.felt(z),))

    def u(self, i: int) -> "FElt":
        return (self.u1, self.u2, self.u3)[i - 1]

    def __repr__(self):
        return (
            f"Tower(q={self.cfg.q}, lambda={self.lam}, e1={self.e1}, e2={self.e2})"
        )


class FElt:
    """An element a + b*y of F = k(X), with a, b in k(x) canonical."""

    __slots__ = ("tw", "a", "b", "_hash")

    def __init__(self, tw: Tower, a: Rat, b: Rat):
        self.tw = tw
        self.a = a
        self.b = b
        self._hash = None

    def is_zero(self):
        return self.a.is_zero() and self.b.is_zero()

    def is_in_kx(self):
        return self.b.is_zero()

    def is_constant(self):
        return self.b.is_zero() and self.a.is_constant()

    def _coerce(self, other):
        if isinstance(other, FElt):
            return other
        if isinstance(other, (int, Rat)):
            return self.tw.felt(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FElt(self.tw, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return FElt(self.tw, -self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        return self + (-o)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        tw = self.tw
        frat = Rat(tw.k, tw.fpoly)
        a = self.a * o.a + self.b * o.b * frat
        b = self.a * o.b + self.b * o.a
        return FElt(tw, a, b)

    __rmul__ = __mul__

    def conj(self):
        """The hyperelliptic conjugate a - b*y (generator of Gal(F/k(x)))."""
        return FElt(self.tw, self.a, -self.b)

    def norm_to_kx(self) -> Rat:
        """a^2 - b^2 f, the norm down to k(x)."""
        tw = self.tw
        return self.a * self.a - self.b * self.b * Rat(tw.k, tw.fpoly)

    def inv(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        n = self.norm_to_kx()
        ninv = n.inv()
        return FElt(self.tw, self.a * ninv, -self.b * ninv)

    def __truediv__(self, other):
        o = self._coerce(other)
        return self * o.inv()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result = self.tw.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.a, self.b))
        return self._hash

    def __repr__(self):
        if self.b.is_zero():
            return repr(self.a)
        return f"({self.a}) + ({self.b})*y"


# automorphism action signs on K-coordinates (1, s1, s2, s1*s2)
_TAU_SIGNS = {
    "t1": (1, 1, -1, -1),
    "t2": (1, -1, 1, -1),
    "t3": (1, -1, -1, 1),
}


class TElt:
    """An element of the tower at a named level.

    Coordinates are over F in the basis (1, s_i) at level K_i or
    (1, s1, s2, s1*s2) at level K.
    """

    __slots__ = ("tw", "level", "coords", "_hash")

    def __init__(self, tw: Tower, level: str, coords):
        if level not in LEVELS:
            raise LevelMismatch(f"unknown level {level}")
        self.tw = tw
        self.level = level
        self.coords = tuple(coords)
        self._hash = None

    # -- level management -----------------------------------------------------

    def to_K(self) -> "TElt":
        c = self.coords
        tw = self.tw
        z = tw.zero
        if self.level == "K":
            return self
        if self.level == "F":
            return TElt(tw, "K", (c[0], z, z, z))
        if self.level == "K1":
            return TElt(tw, "K", (c[0], c[1], z, z))
        if self.level == "K2":
            return TElt(tw, "K", (c[0], z, c[1], z))
        # K3: a + b*s3 with s3 = s1*s2
        return TElt(tw, "K", (c[0], z, z, c[1]))

    def try_level(self, level: str):
        """Rewrite at the requested level if the element lies there."""
        if level == self.level:
            return self
        zK = self.to_K()
        x0, x1, x2, x3 = zK.coords
        z = self.tw.zero
        if level == "K":
            return zK
        if level == "F":
            if x1 == z and x2 == z and x3 == z:
                return TElt(self.tw, "F", (x0,))
            return None
        if level == "K1":
            if x2 == z and x3 == z:
                return TElt(self.tw, "K1", (x0, x1))
            return None
        if level == "K2":
            if x1 == z and x3 == z:
                return TElt(self.tw, "K2", (x0, x2))
            return None
        if level == "K3":
            if x1 == z and x2 == z:
                return TElt(self.tw, "K3", (x0, x3))
            return None
        raise LevelMismatch(f"unknown level {level}")

    def at_level(self, level: str) -> "TElt":
        out = self.try_level(level)
        if out is None:
            raise LevelMismatch(f"element does not lie in {level}")
        return out

    @staticmethod
    def _join(l1: str, l2: str) -> str:
        if l1 == l2:
            return l1
        if l2 in _CONTAINED_IN[l1]:
            return l2
        if l1 in _CONTAINED_IN[l2]:
            return l1
        return "K"

    def _pair(self, other):
        if isinstance(other, (int, Rat, FElt)):
            other = TElt(self.tw, "F", (self.tw.felt(other),))
        if not isinstance(other, TElt):
            return None, None
        lvl = TElt._join(self.level, other.level)
        return self.at_level(lvl) if self.level != lvl else self, (
            other.at_level(lvl) if other.level != lvl else other
        )

    # -- predicates ------------------------------------------------------------

    def is_zero(self):
        return all(c.is_zero() for c in self.coords)

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return TElt(self.tw, a.level, tuple(x + y for x, y in zip(a.coords, b.coords)))

    __radd__ = __add__

    def __neg__(self):
        return TElt(self.tw, self.level, tuple(-c for c in self.coords))

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        tw = self.tw
        lvl = a.level
        if lvl == "F":
            return TElt(tw, "F", (a.coords[0] * b.coords[0],))
        if lvl in ("K1", "K2", "K3"):
            u = {"K1": tw.u1, "K2": tw.u2, "K3": tw.u3}[lvl]
            a0, a1 = a.coords
            b0, b1 = b.coords
            return TElt(tw, lvl, (a0 * b0 + a1 * b1 * u, a0 * b1 + a1 * b0))
        # level K: basis 1, s1, s2, s1 s2 with s1^2 = u1, s2^2 = u2
        x0, x1, x2, x3 = a.coords
        y0, y1, y2, y3 = b.coords
        u1, u2 = tw.u1, tw.u2
        u3 = tw.u3
        c0 = x0 * y0 + (x1 * y1) * u1 + (x2 * y2) * u2 + (x3 * y3) * u3
        c1 = x0 * y1 + x1 * y0 + (x2 * y3 + x3 * y2) * u2
        c2 = x0 * y2 + x2 * y0 + (x1 * y3 + x3 * y1) * u1
        c3 = x0 * y3 + x3 * y0 + x1 * y2 + x2 * y1
        return TElt(tw, "K", (c0, c1, c2, c3))

    __rmul__ = __mul__

    def inv(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        tw = self.tw
        if self.level == "F":
            return TElt(tw, "F", (self.coords[0].inv(),))
        if self.level in ("K1", "K2", "K3"):
            u = {"K1": tw.u1, "K2": tw.u2, "K3": tw.u3}[self.level]
            a0, a1 = self.coords
            n = a0 * a0 - a1 * a1 * u
            if n.is_zero():
                raise DivisionByZero("inverse of zero divisor (norm vanished)")
            ni = n.inv()
            return TElt(tw, self.level, (a0 * ni, -a1 * ni))
        # level K: multiply the three nontrivial conjugates, divide by norm
        zt1 = self.galois("t1")
        zt2 = self.galois("t2")
        zt3 = self.galois("t3")
        prod = zt1 * zt2 * zt3
        n = (self * prod).try_level("F")
        if n is None:
            raise RuntimeError("norm did not land in F")
        nf = n.coords[0]
        if nf.is_zero():
            raise DivisionByZero("inverse of zero divisor (norm vanished)")
        return prod * TElt(tw, "F", (nf.inv(),))

    def __truediv__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a * b.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result = TElt(self.tw, "F", (self.tw.one,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a.coords == b.coords

    def __hash__(self):
        if self._hash is None:
            z = self.try_level("F") or self
            if z.level != "F":
                for lvl in ("K1", "K2", "K3"):
                    w = self.try_level(lvl)
                    if w is not None:
                        z = w
                        break
            self._hash = hash((z.level, z.coords))
        return self._hash

    # -- Galois action ------------------------------------------------------------

    def galois(self, g: str) -> "TElt":
        """Apply one of s1, s2, s3 (at level K_i) or t1, t2, t3 (at level K).

        Elements of F are fixed by everything.  Internally the tau maps are
        also usable on any element via its K-coordinates.
        """
        tw = self.tw
        if self.level == "F":
            if g in ("s1", "s2", "s3", "t1", "t2", "t3"):
                return self
            raise LevelMismatch(f"unknown automorphism {g}")
        if g in ("s1", "s2", "s3"):
            want = "K" + g[1]
            if self.level != want:
                raise LevelMismatch(f"{g} acts on {want}, not {self.level}")
            a0, a1 = self.coords
            return TElt(tw, self.level, (a0, -a1))
        if g in _TAU_SIGNS:
            z = self.to_K()
            signs = _TAU_SIGNS[g]
            coords = tuple(c if s == 1 else -c for c, s in zip(z.coords, signs))
            out = TElt(tw, "K", coords)
            if self.level != "K":
                back = out.try_level(self.level)
                if back is not None:
                    return back
            return out
        raise LevelMismatch(f"unknown automorphism {g}")

    def conjugates(self, down_to: str):
        """All Galois conjugates over the subfield down_to."""
        lvl = self.level
        if down_to == lvl:
            return [self]
        if down_to not in _CONTAINED_IN or lvl not in _CONTAINED_IN[down_to]:
            raise LevelMismatch(f"{down_to} is not a subfield of {lvl}")
        if lvl in ("K1", "K2", "K3"):
            return [self, self.galois("s" + lvl[1])]
        if lvl == "K":
            if down_to == "F":
                return [self, self.galois("t1"), self.galois("t2"), self.galois("t3")]
            # down_to = K_i: Gal(K/K_i) = {id, t_i}
            return [self, self.galois("t" + down_to[1])]
        raise LevelMismatch(f"no conjugates from {lvl} to {down_to}")

    def trace(self, down_to: str) -> "TElt":
        out = None
        for c in self.conjugates(down_to):
            out = c if out is None else out + c
        res = out.try_level(down_to)
        if res is None:
            raise RuntimeError("trace did not land in the base level")
        return res

    def norm(self, down_to: str) -> "TElt":
        out = None
        for c in self.conjugates(down_to):
            out = c if out is None else out * c
        res = out.try_level(down_to)
        if res is None:
            raise RuntimeError("norm did not land in the base level")
        return res

    def as_felt(self) -> FElt:
        z = self.at_level("F")
        return z.coords[0]

    def __repr__(self):
        names = {"F": ("",), "K1": ("", "s1"), "K2": ("", "s2"), "K3": ("", "s3"),
                 "K": ("", "s1", "s2", "s1*s2")}[self.level]
        parts = []
        for c, n in zip(self.coords, names):
            if c.is_zero():
                continue
            parts.append(f"({c}){'*' + n if n else ''}")
        return " + ".join(parts) if parts else "0"


def tower_arith(a: TElt, b: TElt, op: str) -> TElt:
    """add / mul / inv on tower elements (inv ignores b)."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    raise ValueError(f"unknown op {op}")


def apply_automorphism(z: TElt, g: str) -> TElt:
    """Named automorphism action.

    sigma_i is only defined on K_i (and F); tau_i is defined on all of K, so
    it is accepted at any level via the K-coordinates.
    """
    name = {"sigma1": "s1", "sigma2": "s2", "sigma3": "s3",
            "tau1": "t1", "tau2": "t2", "tau3": "t3"}.get(g, g)
    return z.galois(name)


def trace_norm(z: TElt, down_to: str):
    """(trace, norm) of z down to the named subfield."""
    return z.trace(down_to), z.norm(down_to)
