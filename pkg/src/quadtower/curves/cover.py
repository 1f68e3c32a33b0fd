"""Unramified double covers of curves in the tower.

DoubleCover(name, base, u, level): the curve with function field
base(sqrt u), where div(u) is even (checked), so the cover is everywhere
unramified and every place sits over a base place with e = 1.  Elements of
the cover's function field are tower elements at the named level;
`decompose` writes them as A + B*s over the base.
"""

from __future__ import annotations

from ..errors import CurveMismatch, ZeroElement
from ..ffield import ExtField
from ..tower import FElt, TElt, Tower
from .divisors import Divisor
from .places import PlaceCover


class DoubleCover:
    genus = 1  # etale double cover of a genus-1 curve

    def __init__(self, name: str, base, u, level: str):
        self.name = name
        self.base = base
        self.tw: Tower = base.tw
        self.k = base.k
        self.u = u                      # element of the base function field
        self.level = level              # tower level of this curve's field
        self._split_cache = {}
        self._sroot_cache = {}
        udiv = base.divisor_of(u)
        if any(m % 2 for m in udiv.supp.values()):
            raise ValueError("cover function has an odd divisor: cover would ramify")
        self.half_u_div = Divisor(base.name, {pl: m // 2 for pl, m in udiv.supp.items()})

    # -- elements ---------------------------------------------------------------

    def coerce(self, z) -> TElt:
        if isinstance(z, TElt):
            return z.at_level(self.level)
        if isinstance(z, FElt):
            return self.tw.t_f(z).at_level(self.level)
        return self.tw.t_f(self.tw.felt(z)).at_level(self.level)

    def zero_elt(self):
        return self.coerce(0)

    def one_elt(self):
        return self.coerce(1)

    def decompose(self, z):
        """Write z = A + B*s with A, B in the base function field.

        For covers of X the pieces are FElt; for the top cover they are
        tower elements at level K3.
        """
        z = self.coerce(z)
        if self.level in ("K1", "K2", "K3"):
            return z.coords[0], z.coords[1]
        x0, x1, x2, x3 = z.coords
        tw = self.tw
        return tw.telt("K3", (x0, x3)), tw.telt("K3", (x1, x2 / tw.u1))

    def compose(self, A, B):
        tw = self.tw
        if self.level in ("K1", "K2", "K3"):
            return tw.telt(self.level, (A, B))
        c0, c3 = A.at_level("K3").coords
        d0, d3 = B.at_level("K3").coords
        return tw.telt("K", (c0, d0, d3 * tw.u1, c3))

    def conj(self, z):
        """The nontrivial automorphism over the base (s -> -s)."""
        A, B = self.decompose(z)
        return self.compose(A, -B)

    def norm_to_base(self, z):
        A, B = self.decompose(z)
        return A * A - B * B * self.u

    def mul_f(self, z, felt):
        return self.coerce(z) * felt

    # -- splitting of base places ------------------------------------------------

    def m_at(self, base_place) -> int:
        return self.half_u_div.mult(base_place)

    def _unit_part(self, base_place):
        m = self.m_at(base_place)
        pi = self.base.uniformizer(base_place)
        return self.u * pi ** (-2 * m)

    def _split_data(self, base_place):
        """(is_split, unit_residue, canonical_root_or_None)."""
        if base_place in self._split_cache:
            return self._split_cache[base_place]
        ubar = self.base.residue(base_place, self._unit_part(base_place))
        kP = self.base.residue_field(base_place)
        if kP.is_square(ubar):
            out = (True, ubar, kP.sqrt(ubar))
        else:
            out = (False, ubar, None)
        self._split_cache[base_place] = out
        return out

    def splits(self, base_place) -> bool:
        return self._split_data(base_place)[0]

    def places_above(self, base_place):
        if self.splits(base_place):
            return [
                PlaceCover(self.name, base_place, +1, base_place.degree),
                PlaceCover(self.name, base_place, -1, base_place.degree),
            ]
        return [PlaceCover(self.name, base_place, 0, 2 * base_place.degree)]

    def places(self, max_degree):
        out = []
        for P in self.base.places(max_degree):
            for w in self.places_above(P):
                if w.degree <= max_degree:
                    out.append(w)
        out.sort(key=lambda w: w.sort_key())
        return out

    def infinite_places(self):
        out = []
        for P in self.base.infinite_places():
            out.extend(self.places_above(P))
        return out

    def uniformizer(self, place):
        return self.base.uniformizer(place.base)

    def residue_field(self, place):
        self._check_place(place)
        kP = self.base.residue_field(place.base)
        if place.tag != 0:
            return kP
        _, ubar, _ = self._split_data(place.base)
        return ExtField(kP, (kP.neg(ubar), kP.zero, kP.one))

    def _check_place(self, place):
        if not isinstance(place, PlaceCover) or place.cover != self.name:
            raise CurveMismatch(f"place {place!r} is not on {self.name}")

    # -- valuations and residues ----------------------------------------------------

    def _res_or_zero(self, base_place, z):
        kP = self.base.residue_field(base_place)
        if z.is_zero():
            return kP.zero
        if self.base.valuation(base_place, z) > 0:
            return kP.zero
        return self.base.residue(base_place, z)

    def valuation(self, place, z) -> int:
        self._check_place(place)
        z = self.coerce(z)
        if z.is_zero():
            raise ZeroElement("valuation of zero")
        P = place.base
        m = self.m_at(P)
        A, B = self.decompose(z)
        vA = None if A.is_zero() else self.base.valuation(P, A)
        vB = None if B.is_zero() else self.base.valuation(P, B) + m
        t = min(v for v in (vA, vB) if v is not None)
        if place.tag == 0 or vA is None or vB is None or vA != vB:
            return t
        r = self._branch_residue_after_shift(place, A, B, m, t)
        if r != self.base.residue_field(P).zero:
            return t
        return self.base.valuation(P, self.norm_to_base(z)) - t

    def _branch_residue_after_shift(self, place, A, B, m, t):
        P = place.base
        kP = self.base.residue_field(P)
        pi = self.base.uniformizer(P)
        _, _, rho = self._split_data(P)
        sgn = rho if place.tag == 1 else kP.neg(rho)
        rA = self._res_or_zero(P, A * pi ** (-t))
        rB = self._res_or_zero(P, B * pi ** (m - t))
        return kP.add(rA, kP.mul(rB, sgn))

    def residue(self, place, z):
        self._check_place(place)
        z = self.coerce(z)
        P = place.base
        m = self.m_at(P)
        A, B = self.decompose(z)
        if place.tag == 0:
            pi = self.base.uniformizer(P)
            ra = self._res_or_zero(P, A)
            rb = self._res_or_zero(P, B * pi ** m)
            return (ra, rb)
        vA = None if A.is_zero() else self.base.valuation(P, A)
        vB = None if B.is_zero() else self.base.valuation(P, B) + m
        t = min(v for v in (vA, vB) if v is not None)
        if t >= 0:
            return self._branch_residue_after_shift(place, A, B, m, 0)
        # cancellation below level zero: expand in the base local ring
        if not hasattr(self.base, "modring"):
            raise NotImplementedError("deep residues need a base local ring")
        pi = self.base.uniformizer(P)
        j = -t
        ring = self.base.modring(P, j + 1)
        rho = self._s_unit_image(P, j + 1, place.tag)
        wa = ring.reduce(A * pi ** j)
        wb = ring.reduce(B * pi ** (j + m))
        return ring.digit(ring.add(wa, ring.mul(wb, rho)), j)

    # -- local unit images of s (covers of X only) --------------------------------------

    def _s_unit_image(self, base_place, N, tag):
        """Image of s * pi^(-m) in the base local ring at precision N."""
        key = (base_place, N, tag)
        if key in self._sroot_cache:
            return self._sroot_cache[key]
        ring = self.base.modring(base_place, N)
        uimg = ring.reduce(self._unit_part(base_place))
        _, _, rho0 = self._split_data(base_place)
        if rho0 is None:
            raise ValueError("no branch at an inert place")
        rho = ring.scale_res(ring.reduce(self.tw.one), rho0)
        inv2 = ring.inv_unit(ring.reduce(self.tw.felt(2)))
        for _ in range(max(1, N).bit_length() + 2):
            err = ring.add(ring.mul(rho, rho), ring.neg(uimg))
            if ring.is_zero(err):
                break
            rho = ring.mul(ring.add(rho, ring.mul(uimg, ring.inv_unit(rho))), inv2)
        assert ring.is_zero(ring.add(ring.mul(rho, rho), ring.neg(uimg)))
        if tag == -1:
            rho = ring.neg(rho)
        self._sroot_cache[key] = rho
        return rho

    # -- linear order-of-vanishing tests --------------------------------------------

    def vanish_rows(self, place, elems, c):
        self._check_place(place)
        P = place.base
        m = self.m_at(P)
        pi = self.base.uniformizer(P)
        decs = [self.decompose(z) for z in elems]
        if place.tag == 0:
            rows_a = self.base.vanish_rows(P, [A for A, _ in decs], c)
            rows_b = self.base.vanish_rows(P, [(B * pi ** m) for _, B in decs], c)
            return [tuple(ra) + tuple(rb) for ra, rb in zip(rows_a, rows_b)]
        j = 0
        for A, B in decs:
            if not A.is_zero():
                j = max(j, self.base.component_shift(P, A))
            Bs = B * pi ** m
            if not Bs.is_zero():
                j = max(j, self.base.component_shift(P, Bs))
        j = max(j, -c)
        if c + j <= 0:
            return [tuple() for _ in elems]
        N = c + j
        ring = self.base.modring(P, N)
        rho = self._s_unit_image(P, N, place.tag)
        rows = []
        for A, B in decs:
            wa = ring.reduce(A * pi ** j)
            wb = ring.reduce(B * pi ** (j + m))
            rows.append(ring.coefvec(ring.add(wa, ring.mul(wb, rho))))
        return rows

    # -- divisors ------------------------------------------------------------------------

    def divisor_support_candidates(self, z):
        z = self.coerce(z)
        if z.is_zero():
            raise ZeroElement("divisor of zero")
        A, B = self.decompose(z)
        base_places = {}
        for w in (A, B, self.norm_to_base(z)):
            if w.is_zero():
                continue
            for pl in self.base.divisor_support_candidates(w):
                base_places[pl] = True
        for pl in self.half_u_div.supp:
            base_places[pl] = True
        out = []
        for P in sorted(base_places, key=lambda p: p.sort_key()):
            out.extend(self.places_above(P))
        return out

    def divisor_of(self, z):
        z = self.coerce(z)
        if z.is_zero():
            raise ZeroElement("divisor of zero")
        supp = {}
        for w in self.divisor_support_candidates(z):
            v = self.valuation(w, z)
            if v:
                supp[w] = v
        D = Divisor(self.name, supp)
        assert D.degree() == 0, "principal divisor must have degree zero"
        return D

    def pullback(self, D: Divisor) -> Divisor:
        if D.curve != self.base.name:
            raise CurveMismatch("pullback needs a divisor on the base curve")
        supp = {}
        for P, mlt in D.supp.items():
            for w in self.places_above(P):
                supp[w] = supp.get(w, 0) + mlt
        return Divisor(self.name, supp)

    def pushforward(self, D: Divisor) -> Divisor:
        if D.curve != self.name:
            raise CurveMismatch("pushforward needs a divisor on the cover")
        supp = {}
        for w, mlt in D.supp.items():
            f = w.degree // w.base.degree
            supp[w.base] = supp.get(w.base, 0) + f * mlt
        return Divisor(self.base.name, supp)


def tower_curves(tw: Tower):
    """The curves X, Y1, Y2, Y3, Y with shared caches, keyed by name."""
    from .places import CurveX

    X = CurveX(tw)
    Y1 = DoubleCover("Y1", X, tw.u1, "K1")
    Y2 = DoubleCover("Y2", X, tw.u2, "K2")
    Y3 = DoubleCover("Y3", X, tw.u3, "K3")
    Y = DoubleCover("Y", Y3, tw.t_f(tw.u1).at_level("K3"), "K")
    return {"X": X, "Y1": Y1, "Y2": Y2, "Y3": Y3, "Y": Y}
