"""Picard groups of the tower curves.

Every curve here has genus 1 and a rational base point, so a degree-0 class
has a unique representative (P) - (base) with P a degree-1 place; classes
are reduced to that form through one-dimensional Riemann-Roch spaces.
PicElement(curve, d, pt) denotes the class of (pt) + (d-1)(base).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import CurveMismatch
from .divisors import Divisor
from .rr import rr_basis


@dataclass(frozen=True)
class PicElement:
    curve: str
    degree: int
    point: object  # a degree-1 place

    def sort_key(self):
        return (self.degree, self.point.sort_key())

    def __repr__(self):
        return f"Pic[{self.curve}](deg {self.degree}, {self.point!r})"


class PicGroup:
    """Group operations on Pic(curve) in reduced-point coordinates."""

    def __init__(self, curve_obj):
        self.curve = curve_obj
        self.name = curve_obj.name
        infs = sorted(curve_obj.infinite_places(), key=lambda p: p.sort_key())
        base = infs[0]
        if base.degree != 1:
            raise RuntimeError("base point at infinity is not rational")
        self.base = base
        self._add_cache = {}
        self._neg_cache = {}
        self._reduce_cache = {}

    # -- reduction ------------------------------------------------------------

    def zero(self) -> PicElement:
        return PicElement(self.name, 0, self.base)

    def reduce(self, D: Divisor) -> PicElement:
        if D.curve != self.name:
            raise CurveMismatch(f"divisor on {D.curve}, group on {self.name}")
        key = D
        hit = self._reduce_cache.get(key)
        if hit is not None:
            return hit
        d = D.degree()
        Z = D - d * Divisor.point(self.base)
        # unique effective representative of Z + (base)
        target = Z + Divisor.point(self.base)
        basis = rr_basis(self.curve, target)
        assert len(basis) == 1, "degree-1 space must be a line"
        h = basis[0]
        eff = self.curve.divisor_of(h) + target
        assert eff.is_effective() and eff.degree() == 1
        [(pt, m)] = eff.supp.items()
        assert m == 1 and pt.degree == 1
        out = PicElement(self.name, d, pt)
        self._reduce_cache[key] = out
        return out

    def divisor_rep(self, c: PicElement) -> Divisor:
        return Divisor.point(c.point) + (c.degree - 1) * Divisor.point(self.base)

    # -- group law --------------------------------------------------------------

    def add(self, c1: PicElement, c2: PicElement) -> PicElement:
        key = tuple(sorted([(c1.degree, c1.point.sort_key()),
                            (c2.degree, c2.point.sort_key())]))
        hit = self._add_cache.get(key)
        if hit is not None:
            return hit
        if c1.point == self.base:
            out = PicElement(self.name, c1.degree + c2.degree, c2.point)
        elif c2.point == self.base:
            out = PicElement(self.name, c1.degree + c2.degree, c1.point)
        else:
            D = (
                Divisor.point(c1.point)
                + Divisor.point(c2.point)
                + (c1.degree + c2.degree - 2) * Divisor.point(self.base)
            )
            out = self.reduce(D)
        self._add_cache[key] = out
        return out

    def neg(self, c: PicElement) -> PicElement:
        hit = self._neg_cache.get(c)
        if hit is not None:
            return hit
        if c.point == self.base:
            out = PicElement(self.name, -c.degree, self.base)
        else:
            D = (1 - c.degree) * Divisor.point(self.base) - Divisor.point(c.point)
            out = self.reduce(D)
        self._neg_cache[c] = out
        return out

    def sub(self, c1, c2):
        return self.add(c1, self.neg(c2))

    def mult(self, n: int, c: PicElement) -> PicElement:
        out = self.zero()
        if n < 0:
            c = self.neg(c)
            n = -n
        acc = c
        while n:
            if n & 1:
                out = self.add(out, acc)
            acc = self.add(acc, acc)
            n >>= 1
        return out

    # -- enumeration ---------------------------------------------------------------

    def deg1_places(self):
        return [p for p in self.curve.places(1) if p.degree == 1]

    def pic0(self):
        """All of Pic^0 as reduced elements (genus 1: one per rational point)."""
        return [PicElement(self.name, 0, p) for p in self.deg1_places()]

    def order_pic0(self):
        return len(self.deg1_places())


# -- finite-quotient machinery ----------------------------------------------------


class PicQuotient:
    """Pic(cover)/pullback(Pic(base)) as a finite group with chosen reps.

    Internally: Pic = Z (+) Pic^0 in the base-point splitting; the quotient
    is computed inside (Z/L) (+) Pic^0 with L = (pullback degree) * exponent,
    which the subgroup provably contains L*(1,0).
    """

    def __init__(self, cover_group: PicGroup, base_group: PicGroup, cover_obj):
        self.G = cover_group
        self.B = base_group
        self.cover = cover_obj
        pts = cover_group.pic0()
        self.pic0_index = {c.point: i for i, c in enumerate(pts)}
        self.pic0_list = pts
        n = len(pts)
        # exponent of Pic^0
        expo = 1
        for c in pts:
            o, acc = 1, c
            while acc.point != cover_group.base:
                acc = cover_group.add(acc, c)
                o += 1
            expo = _lcm(expo, o)
        self.exponent = expo
        # subgroup generators: pullbacks of a degree-1 class and of Pic^0(base)
        gens = []
        base_pt_class = PicElement(base_group.name, 1, base_group.base)
        gens.append(self._pull(base_pt_class))
        for c in base_group.pic0():
            gens.append(self._pull(c))
        self.gens = gens
        degs = [g.degree for g in gens]
        self.gdeg = _gcd_list([d for d in degs if d] or [0])
        self.L = (self.gdeg if self.gdeg else 1) * self.exponent * 2
        self._build_cosets()

    def _pull(self, c: PicElement) -> PicElement:
        D = self.B.divisor_rep(c)
        return self.G.reduce(self.cover.pullback(D))

    def _key(self, c: PicElement):
        return (c.degree % self.L, c.point)

    def _build_cosets(self):
        G, L = self.G, self.L
        # enumerate (Z/L) x Pic^0 as PicElements with degree in [0, L)
        nodes = {}
        for d in range(L):
            for c in self.pic0_list:
                nodes[(d, c.point)] = PicElement(self.G.name, d, c.point)
        parent = {key: key for key in nodes}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb, key=_node_key)] = min(ra, rb, key=_node_key)

        for key, elt in nodes.items():
            for g in self.gens:
                s = G.add(elt, g)
                skey = (s.degree % L, s.point)
                union(key, skey)
        classes = {}
        for key in nodes:
            classes.setdefault(find(key), []).append(key)
        self._root_of = {key: find(key) for key in nodes}
        reps = []
        for root, members in classes.items():
            best = min(members, key=_node_key)
            reps.append(nodes[best])
        reps.sort(key=lambda c: c.sort_key())
        self.reps = reps
        self._roots = {self._root_of[(r.degree % L, r.point)]: r for r in reps}

    def order(self):
        return len(self.reps)

    def coset_rep(self, c: PicElement) -> PicElement:
        root = self._root_of[(c.degree % self.L, c.point)]
        return self._roots[root]

    def reduce_divisor(self, D: Divisor) -> PicElement:
        return self.coset_rep(self.G.reduce(D))


def _node_key(key):
    d, pt = key
    return (d, pt.sort_key())


def _lcm(a, b):
    from math import gcd

    return a * b // gcd(a, b)


def _gcd_list(vals):
    from math import gcd

    g = 0
    for v in vals:
        g = gcd(g, abs(v))
    return g


def pic_quotient_reps(curves: dict, i: int, degree_window: int = 2):
    """Representatives of T_i-classes.

    i = 0: Pic(X) itself within the degree window (the quotient is Z via the
    degree map after normalizing the second factor).
    i = 1, 2, 3: the finite group Pic(Y_i)/f_i^* Pic(X).
    """
    if i == 0:
        PX = PicGroup(curves["X"])
        out = []
        for d in range(-degree_window, degree_window + 1):
            for c in PX.pic0():
                out.append(PicElement("X", d, c.point))
        return out
    name = f"Y{i}"
    q = PicQuotient(PicGroup(curves[name]), PicGroup(curves["X"]), curves[name])
    return q.reps
