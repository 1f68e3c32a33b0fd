"""Closed points (places) of X and of its unramified double covers.

X : y^2 = f(x) sits over the x-line.  A place of X is the infinite place O
(x has a double pole), a ramified place above a root of f, or a finite place
above a monic irreducible p(x) coprime to f, split or inert according to
whether f is a square mod p.  Double covers Y = X(sqrt u) with div(u) even
are everywhere unramified, so their places sit over X-places with e = 1 and
are split or inert according to the square class of the unit part of u.

Local questions (valuations, residues, order-of-vanishing tests) are
answered through small exact quotient rings O_P / P^N.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .. import fpoly as fp
from ..errors import BoundExceeded, CurveMismatch, ZeroElement
from ..ffield import ExtField, generic_sqrt
from ..ratfunc import Rat
from ..tower import FElt, TElt, Tower

INF = "inf"
RAM = "ram"
SPLIT = "split"
INERT = "inert"


def _eltkey(e):
    return (e,) if isinstance(e, int) else tuple(_eltkey(c) for c in e)


def _polykey(p):
    return tuple(_eltkey(c) for c in p)


@dataclass(frozen=True)
class PlaceX:
    kind: str            # inf | ram | split | inert
    p: tuple             # monic irreducible of x (ram: x - e); () for inf
    r: tuple             # branch: sqrt of f mod p (split only), else ()
    degree: int
    e_over_x: int        # ramification over the x-line (2 for inf/ram)

    @property
    def curve(self):
        return "X"

    def sort_key(self):
        rank = {INF: 0, RAM: 1, SPLIT: 2, INERT: 3}[self.kind]
        return (self.degree, rank, _polykey(self.p), _polykey(self.r))

    def __repr__(self):
        if self.kind == INF:
            return "X:inf"
        return f"X:{self.kind}[{self.p}|{self.r}]" if self.kind == SPLIT else f"X:{self.kind}[{self.p}]"


@dataclass(frozen=True)
class PlaceCover:
    cover: str           # curve name, e.g. "Y1", "Y3", "Y"
    base: object         # place of the base curve
    tag: int             # +1 / -1 for the two split branches, 0 for inert
    degree: int

    @property
    def kind(self):
        return INERT if self.tag == 0 else SPLIT

    @property
    def curve(self):
        return self.cover

    @property
    def e_over_x(self):
        return self.base.e_over_x

    def sort_key(self):
        return (self.degree, self.base.sort_key(), self.tag)

    def __repr__(self):
        t = {1: "+", -1: "-", 0: "~"}[self.tag]
        return f"{self.cover}:{t}({self.base!r})"


# ---------------------------------------------------------------------------
# local rings O_P / P^N on X
# ---------------------------------------------------------------------------


class SplitModRing:
    """O_P/P^N = k[x]/p^N at a split finite place; y maps to a Hensel root."""

    def __init__(self, curve, place, N):
        self.curve, self.place, self.N = curve, place, N
        k = curve.k
        self.k = k
        self.pN = fp.ppow(k, place.p, N)
        self.yimg = curve._hensel_y(place, N)
        self.zero = ()

    def _rat(self, rat: Rat):
        k = self.k
        num = fp.prem(k, rat.num, self.pN)
        den = fp.prem(k, rat.den, self.pN)
        g, s, _ = fp.pxgcd(k, den, self.pN)
        if fp.pdeg(g) != 0:
            raise ValueError("denominator not invertible at place")
        s = fp.pscale(k, s, k.inv(g[0]))
        return fp.prem(k, fp.pmul(k, num, s), self.pN)

    def reduce(self, z: FElt):
        k = self.k
        a = self._rat(z.a)
        b = self._rat(z.b)
        return fp.prem(k, fp.padd(k, a, fp.pmul(k, b, self.yimg)), self.pN)

    def add(self, u, v):
        return fp.padd(self.k, u, v)

    def mul(self, u, v):
        return fp.prem(self.k, fp.pmul(self.k, u, v), self.pN)

    def neg(self, u):
        return fp.pneg(self.k, u)

    def scale_res(self, u, c):
        """Multiply by a residue-field element (lifted)."""
        return self.mul(u, self.curve._lift_res(self.place, c))

    def inv_unit(self, u):
        k = self.k
        g, s, _ = fp.pxgcd(k, u, self.pN)
        if fp.pdeg(g) != 0:
            raise ValueError("not a unit")
        return fp.prem(k, fp.pscale(k, s, k.inv(g[0])), self.pN)

    def is_zero(self, u):
        return not fp.ptrim(self.k, u)

    def digit(self, u, i):
        """Coefficient of p^i in the p-adic digit expansion, in k_P."""
        k = self.k
        for _ in range(i):
            u = fp.pdiv(k, fp.psub(k, u, fp.prem(k, u, self.place.p)), self.place.p)
        return self.curve._res_from_poly(self.place, fp.prem(k, u, self.place.p))

    def coefvec(self, u):
        k = self.k
        d = fp.pdeg(self.pN)
        u = list(u) + [k.zero] * (d - len(u))
        return tuple(u[:d])


class InertModRing:
    """O_P/P^N at an inert finite place: pairs over k[x]/p^N, Y^2 = f."""

    def __init__(self, curve, place, N):
        self.curve, self.place, self.N = curve, place, N
        k = curve.k
        self.k = k
        self.pN = fp.ppow(k, place.p, N)
        self.fimg = fp.prem(k, curve.tw.fpoly, self.pN)
        self.zero = ((), ())

    def _rat(self, rat: Rat):
        k = self.k
        num = fp.prem(k, rat.num, self.pN)
        den = fp.prem(k, rat.den, self.pN)
        g, s, _ = fp.pxgcd(k, den, self.pN)
        if fp.pdeg(g) != 0:
            raise ValueError("denominator not invertible at place")
        s = fp.pscale(k, s, k.inv(g[0]))
        return fp.prem(k, fp.pmul(k, num, s), self.pN)

    def reduce(self, z: FElt):
        return (self._rat(z.a), self._rat(z.b))

    def add(self, u, v):
        k = self.k
        return (fp.padd(k, u[0], v[0]), fp.padd(k, u[1], v[1]))

    def mul(self, u, v):
        k = self.k
        a = fp.padd(k, fp.pmul(k, u[0], v[0]), fp.pmul(k, fp.pmul(k, u[1], v[1]), self.fimg))
        b = fp.padd(k, fp.pmul(k, u[0], v[1]), fp.pmul(k, u[1], v[0]))
        return (fp.prem(k, a, self.pN), fp.prem(k, b, self.pN))

    def neg(self, u):
        k = self.k
        return (fp.pneg(k, u[0]), fp.pneg(k, u[1]))

    def scale_res(self, u, c):
        return self.mul(u, self.curve._lift_res(self.place, c))

    def inv_unit(self, u):
        k = self.k
        n = fp.prem(
            k,
            fp.psub(k, fp.pmul(k, u[0], u[0]), fp.pmul(k, fp.pmul(k, u[1], u[1]), self.fimg)),
            self.pN,
        )
        g, s, _ = fp.pxgcd(k, n, self.pN)
        if fp.pdeg(g) != 0:
            raise ValueError("not a unit")
        ninv = fp.prem(k, fp.pscale(k, s, k.inv(g[0])), self.pN)
        return (fp.prem(k, fp.pmul(k, u[0], ninv), self.pN),
                fp.prem(k, fp.pmul(k, fp.pneg(k, u[1]), ninv), self.pN))

    def is_zero(self, u):
        return not fp.ptrim(self.k, u[0]) and not fp.ptrim(self.k, u[1])

    def digit(self, u, i):
        k = self.k
        a, b = u
        p = self.place.p
        for _ in range(i):
            a = fp.pdiv(k, fp.psub(k, a, fp.prem(k, a, p)), p)
            b = fp.pdiv(k, fp.psub(k, b, fp.prem(k, b, p)), p)
        sub = self.curve._subfield(self.place)
        ra = self.curve._res_from_poly_sub(sub, fp.prem(k, a, p))
        rb = self.curve._res_from_poly_sub(sub, fp.prem(k, b, p))
        return (ra, rb)

    def coefvec(self, u):
        k = self.k
        d = fp.pdeg(self.pN)
        out = []
        for comp in u:
            cc = list(comp) + [k.zero] * (d - len(comp))
            out.extend(cc[:d])
        return tuple(out)


class SeriesModRing:
    """O_P/P^N = k[t]/t^N at a degree-1 ramified place (and, via the chart
    x -> 1/x, at the infinite place).  Elements are coefficient tuples."""

    def __init__(self, curve, place, N):
        self.curve, self.place, self.N = curve, place, N
        k = curve.k
        self.k = k
        self.zero = ()
        if place.kind == RAM:
            # y is the uniformizer; solve x = e + t^2/g(x), g = f/(x-e)
            e = k.neg(place.p[0])
            g = fp.pdiv(k, curve.tw.fpoly, place.p)
            x = (e,)
            for _ in range(N + 2):
                gx = self._polyser(g, x)
                x = self._trunc(self._seradd((e,), self._sershift(self._serinv(gx), 2)))
            self.ximg = self._trunc(x)
            self.yimg = self._trunc((k.zero, k.one))
            self.flip = False
        else:  # INF via the chart x' = 1/x, y' = y/x^2, t = y'
            finf = self._xpow_f_inverse()
            ginf = fp.pdiv(k, finf, (k.zero, k.one))  # f_inf / x'
            xp = (k.zero,)
            for _ in range(N + 2):
                gx = self._polyser(ginf, xp)
                xp = self._trunc(self._sershift(self._serinv(gx), 2))
            self.xpimg = self._trunc(xp)   # series of x' (valuation 2)
            self.flip = True

    # small truncated series helpers over k ---------------------------------

    def _trunc(self, s):
        return tuple(s[: self.N])

    def _seradd(self, u, v):
        k = self.k
        n = max(len(u), len(v))
        u = list(u) + [k.zero] * (n - len(u))
        v = list(v) + [k.zero] * (n - len(v))
        return tuple(k.add(a, b) for a, b in zip(u, v))

    def _sermul(self, u, v):
        k = self.k
        if not u or not v:
            return ()
        out = [k.zero] * min(self.N, len(u) + len(v) - 1)
        for i, a in enumerate(u):
            if a == k.zero or i >= self.N:
                continue
            for j, b in enumerate(v):
                if i + j >= self.N:
                    break
                out[i + j] = k.add(out[i + j], k.mul(a, b))
        return tuple(out)

    def _sershift(self, u, n):
        return (self.k.zero,) * n + tuple(u[: max(0, self.N - n)])

    def _serinv(self, u):
        k = self.k
        if not u or u[0] == k.zero:
            raise ValueError("series not invertible")
        c = k.inv(u[0])
        out = [c]
        for n in range(1, self.N):
            acc = k.zero
            for i in range(1, n + 1):
                ui = u[i] if i < len(u) else k.zero
                acc = k.add(acc, k.mul(ui, out[n - i]))
            out.append(k.neg(k.mul(c, acc)))
        return tuple(out)

    def _polyser(self, poly, s):
        acc = ()
        for c in reversed(poly):
            acc = self._seradd(self._sermul(acc, s), (c,))
        return self._trunc(acc)

    def _xpow_f_inverse(self):
        """x'^4 * f(1/x') as a polynomial in x'."""
        k = self.k
        f = self.curve.tw.fpoly
        out = [k.zero] * 5
        for i, c in enumerate(f):
            out[4 - i] = c
        return fp.ptrim(k, out)

    def _ratser(self, rat: Rat):
        """Series of a rational function of x at the place (v >= 0 required)."""
        k = self.k
        if rat.is_zero():
            return ()
        if not self.flip:
            num = self._polyser(rat.num, self.ximg)
            den = self._polyser(rat.den, self.ximg)
            return self._trunc(self._sermul(num, self._serinv(den)))
        # chart flip: A(1/x')/B(1/x') = x'^(degB-degA) revA(x')/revB(x')
        v = rat.val_at_infty()
        if v < 0:
            raise ValueError("pole at infinity in series reduction")
        rnum = tuple(reversed(rat.num))
        rden = tuple(reversed(rat.den))
        num = self._polyser(rnum, self.xpimg)
        den = self._polyser(rden, self.xpimg)
        s = self._sermul(num, self._serinv(den))
        xv = self._serpow(self.xpimg, v)
        return self._trunc(self._sermul(xv, s))

    def _serpow(self, s, n):
        out = (self.k.one,)
        for _ in range(n):
            out = self._sermul(out, s)
        return self._trunc(out)

    def reduce(self, z: FElt):
        k = self.k
        if not self.flip:
            a = self._ratser(z.a)
            b = self._ratser(z.b)
            return self._trunc(self._seradd(a, self._sermul(b, self.yimg)))
        # y = y' / x'^2 = t / x'^2; b(x) y = [b(1/x') / x'^2] * t
        a = self._ratser(z.a)
        if z.b.is_zero():
            return self._trunc(a)
        vb = z.b.val_at_infty()
        if vb < 2:
            raise ValueError("odd component has a pole at infinity")
        rnum = tuple(reversed(z.b.num))
        rden = tuple(reversed(z.b.den))
        num = self._polyser(rnum, self.xpimg)
        den = self._polyser(rden, self.xpimg)
        s = self._sermul(num, self._serinv(den))
        s = self._sermul(s, self._serpow(self.xpimg, vb - 2))
        bpart = self._sershift(s, 1)  # times t
        return self._trunc(self._seradd(a, bpart))

    def add(self, u, v):
        return self._trunc(self._seradd(u, v))

    def mul(self, u, v):
        return self._trunc(self._sermul(u, v))

    def neg(self, u):
        return tuple(self.k.neg(a) for a in u)

    def scale_res(self, u, c):
        return self._trunc(tuple(self.k.mul(a, c) for a in u))

    def inv_unit(self, u):
        return self._serinv(u)

    def is_zero(self, u):
        return all(c == self.k.zero for c in u)

    def digit(self, u, i):
        return u[i] if i < len(u) else self.k.zero

    def coefvec(self, u):
        k = self.k
        out = list(u) + [k.zero] * (self.N - len(u))
        return tuple(out[: self.N])


# ---------------------------------------------------------------------------
# the base curve X
# ---------------------------------------------------------------------------


class CurveX:
    """Places, valuations, residues and local tests on X itself."""

    name = "X"
    genus = 1

    def __init__(self, tw: Tower):
        self.tw = tw
        self.k = tw.k
        self._hensel_cache = {}
        self._place_cache = {}

    # -- element plumbing (elements of X's function field are FElt) ---------

    def zero_elt(self):
        return self.tw.zero

    def one_elt(self):
        return self.tw.one

    def coerce(self, z):
        if isinstance(z, TElt):
            return z.as_felt()
        return self.tw.felt(z)

    def mul_f(self, z, w: FElt):
        return self.coerce(z) * w

    def conjugates_over_x(self, z):
        z = self.coerce(z)
        return [z, z.conj()]

    # -- place enumeration ----------------------------------------------------

    def infinite_place(self):
        return PlaceX(INF, (), (), 1, 2)

    def infinite_places(self):
        return [self.infinite_place()]

    def ram_place(self, e):
        k = self.k
        return PlaceX(RAM, (k.neg(e), k.one), (), 1, 2)

    def places_above_poly(self, p):
        """Places of X above the monic irreducible p(x)."""
        k = self.k
        key = _polykey(p)
        if key in self._place_cache:
            return self._place_cache[key]
        fbar = fp.prem(k, self.tw.fpoly, p)
        if not fbar:
            out = [PlaceX(RAM, p, (), fp.pdeg(p), 2)]
        else:
            kP = self._subfield_for_poly(p)
            fres = self._res_from_poly_sub((p, kP), fbar)
            if kP.is_square(fres):
                r = kP.sqrt(fres)
                rpoly = self._res_to_poly((p, kP), r)
                rneg = fp.pneg(k, rpoly)
                lo, hi = sorted([rpoly, rneg], key=_polykey)
                out = [
                    PlaceX(SPLIT, p, lo, fp.pdeg(p), 1),
                    PlaceX(SPLIT, p, hi, fp.pdeg(p), 1),
                ]
            else:
                out = [PlaceX(INERT, p, (), 2 * fp.pdeg(p), 1)]
        self._place_cache[key] = out
        return out

    def places(self, max_degree):
        if max_degree > self.tw.cfg.degree_bound:
            raise BoundExceeded(
                f"requested degree {max_degree} exceeds configured bound "
                f"{self.tw.cfg.degree_bound}"
            )
        out = [self.infinite_place()]
        k = self.k
        for d in range(1, max_degree + 1):
            for p in fp.monic_irreducibles(k, d):
                for pl in self.places_above_poly(p):
                    if pl.degree <= max_degree:
                        out.append(pl)
        out.sort(key=lambda pl: pl.sort_key())
        return out

    # -- residue fields --------------------------------------------------------

    def _subfield_for_poly(self, p):
        """k[x]/(p) as a field object."""
        if fp.pdeg(p) == 1:
            return self.k
        return ExtField(self.k, p)

    def _subfield(self, place):
        """(p, field) pair for the residue field of x below the place."""
        if place.kind == INF:
            return ((), self.k)
        return (place.p, self._subfield_for_poly(place.p))

    def _res_from_poly_sub(self, sub, poly):
        p, kP = sub
        if kP is self.k or not isinstance(kP, ExtField):
            # degree-1: evaluate at the root
            if fp.pdeg(p) >= 1:
                root = self.k.neg(p[0])
                return fp.peval(self.k, poly, root)
            return poly[0] if poly else self.k.zero
        coeffs = list(poly) + [self.k.zero] * (kP.deg - len(poly))
        return tuple(coeffs[: kP.deg])

    def _res_to_poly(self, sub, res):
        p, kP = sub
        if isinstance(kP, ExtField) and kP.base is self.k:
            return fp.ptrim(self.k, res)
        return fp.pconst(self.k, res)

    def _res_from_poly(self, place, poly):
        return self._res_from_poly_sub(self._subfield(place), poly)

    def _lift_res(self, place, c):
        """Lift a residue-field element back into the mod ring representation."""
        sub = self._subfield(place)
        return self._res_to_poly(sub, c)

    def residue_field(self, place):
        if place.kind in (INF, RAM):
            if place.kind == RAM and fp.pdeg(place.p) > 1:
                return self._subfield_for_poly(place.p)
            return self.k
        if place.kind == SPLIT:
            return self._subfield_for_poly(place.p)
        # inert: quadratic extension of k[x]/p by a root of Y^2 = f
        sub = self._subfield(place)
        fres = self._res_from_poly_sub(sub, fp.prem(self.k, self.tw.fpoly, place.p))
        kp = sub[1]
        return ExtField(kp, (kp.neg(fres), kp.zero, kp.one))

    # -- Hensel data -------------------------------------------------------------

    def _hensel_y(self, place, N):
        """Root of Y^2 = f in k[x]/p^N lifting the branch r (split places)."""
        key = (_polykey(place.p), _polykey(place.r), N)
        cached = self._hensel_cache.get(key)
        if cached is not None:
            return cached
        k = self.k
        pN = fp.ppow(k, place.p, N)
        y = place.r
        fmod = fp.prem(k, self.tw.fpoly, pN)
        # Newton iteration y <- y - (y^2 - f)/(2y) mod p^N
        for _ in range(max(1, N).bit_length() + 2):
            y2 = fp.prem(k, fp.pmul(k, y, y), pN)
            err = fp.psub(k, y2, fmod)
            if not err:
                break
            den = fp.prem(k, fp.pscale(k, y, k.from_int(2)), pN)
            g, s, _ = fp.pxgcd(k, den, pN)
            if fp.pdeg(g) != 0:
                raise RuntimeError("Hensel derivative not a unit")
            dinv = fp.pscale(k, s, k.inv(g[0]))
            y = fp.prem(k, fp.psub(k, y, fp.pmul(k, err, dinv)), pN)
        assert not fp.ptrim(k, fp.psub(k, fp.prem(k, fp.pmul(k, y, y), pN), fmod))
        self._hensel_cache[key] = y
        return y

    # -- uniformizers ---------------------------------------------------------------

    def uniformizer(self, place) -> FElt:
        tw = self.tw
        if place.kind == INF:
            return tw.x / tw.y
        if place.kind == RAM:
            return tw.y
        return tw.felt(Rat(self.k, place.p))

    # -- valuations -------------------------------------------------------------------

    def _component_vals(self, place, z: FElt):
        """(v(a-part), v(b y-part)) as contributions to v_P, None for zero."""
        va = vb = None
        if place.kind == INF:
            if not z.a.is_zero():
                va = 2 * z.a.val_at_infty()
            if not z.b.is_zero():
                vb = 2 * z.b.val_at_infty() - 3
        elif place.kind == RAM:
            if not z.a.is_zero():
                va = 2 * z.a.val_at_poly(place.p)
            if not z.b.is_zero():
                vb = 2 * z.b.val_at_poly(place.p) + 1
        else:
            if not z.a.is_zero():
                va = z.a.val_at_poly(place.p)
            if not z.b.is_zero():
                vb = z.b.val_at_poly(place.p)
        return va, vb

    def valuation(self, place, z) -> int:
        z = self.coerce(z)
        if z.is_zero():
            raise ZeroElement("valuation of zero")
        va, vb = self._component_vals(place, z)
        vals = [v for v in (va, vb) if v is not None]
        m = min(vals)
        if place.kind in (INF, RAM, INERT):
            return m
        # split: the two components can cancel
        if va is None or vb is None or va != vb:
            return m
        res = self._split_residue_after_shift(place, z, m)
        if res != self.residue_field(place).zero:
            return m
        nrm = z.norm_to_kx()
        return nrm.val_at_poly(place.p) - m

    def _split_residue_after_shift(self, place, z, m):
        """Residue of z * p^(-m) at a split place (first nonzero digit)."""
        k = self.k
        prat = Rat(k, place.p)
        zz = z * self.tw.felt(prat ** (-m))
        ring = SplitModRing(self, place, 1)
        w = ring.reduce(zz)
        return self._res_from_poly(place, w)

    def residue(self, place, z):
        """Value of z in the residue field; requires v_P(z) = 0."""
        z = self.coerce(z)
        kP = self.residue_field(place)
        if place.kind == SPLIT:
            va, vb = self._component_vals(place, z)
            m = min(v for v in (va, vb) if v is not None)
            if m >= 0:
                ring = SplitModRing(self, place, 1)
                return self._res_from_poly(place, ring.reduce(z))
            j = -m
            ring = SplitModRing(self, place, j + 1)
            prat = Rat(self.k, place.p)
            w = ring.reduce(z * self.tw.felt(prat ** j))
            return ring.digit(w, j)
        if place.kind == INERT:
            ring = InertModRing(self, place, 1)
            a, b = ring.reduce(z)
            sub = self._subfield(place)
            ra = self._res_from_poly_sub(sub, a)
            rb = self._res_from_poly_sub(sub, b)
            return (ra, rb)
        ring = SeriesModRing(self, place, 1)
        w = ring.reduce(z)
        return ring.digit(w, 0)

    # -- linear order-of-vanishing tests ----------------------------------------------

    def component_shift(self, place, z: FElt) -> int:
        """Least j >= 0 making the components of z * pi^j integral at place."""
        z = self.coerce(z)
        j = 0
        pi = self.uniformizer(place)
        while not self._components_integral(place, z):
            z = z * pi
            j += 1
            if j > 400:
                raise RuntimeError("component shift runaway")
        return j

    def _components_integral(self, place, z: FElt) -> bool:
        if place.kind == INF:
            ok_a = z.a.is_zero() or z.a.val_at_infty() >= 0
            ok_b = z.b.is_zero() or z.b.val_at_infty() >= 2
            return ok_a and ok_b
        ok_a = z.a.is_zero() or z.a.val_at_poly(place.p) >= 0
        ok_b = z.b.is_zero() or z.b.val_at_poly(place.p) >= 0
        return ok_a and ok_b

    def vanish_rows(self, place, elems, c):
        """k-linear rows whose joint vanishing on an element z of the span
        of elems is equivalent to v_P(z) >= c."""
        elems = [self.coerce(z) for z in elems]
        pi = self.uniformizer(place)
        j = max([0] + [self.component_shift(place, z) for z in elems])
        if c + j <= 0:
            return [tuple() for _ in elems]
        if place.kind == SPLIT:
            ring = SplitModRing(self, place, c + j)
            pij = pi ** j
            return [ring.coefvec(ring.reduce(z * pij)) for z in elems]
        if place.kind == INERT:
            ring = InertModRing(self, place, c + j)
            pij = pi ** j
            return [ring.coefvec(ring.reduce(z * pij)) for z in elems]
        ring = SeriesModRing(self, place, c + j)
        pij = pi ** j
        rows = []
        for z in elems:
            w = ring.reduce(z * pij)
            rows.append(ring.coefvec(w)[: c + j])
        return rows

    def modring(self, place, N):
        if place.kind == SPLIT:
            return SplitModRing(self, place, N)
        if place.kind == INERT:
            return InertModRing(self, place, N)
        return SeriesModRing(self, place, N)

    # -- divisor of a function ------------------------------------------------------

    def divisor_support_candidates(self, z: FElt):
        """Places where z could have nonzero valuation."""
        z = self.coerce(z)
        if z.is_zero():
            raise ZeroElement("divisor of zero")
        k = self.k
        polys = set()
        for rat in (z.a, z.b, z.norm_to_kx()):
            if rat.is_zero():
                continue
            for poly in (rat.num, rat.den):
                for q, _ in fp.pfactor(k, poly):
                    if fp.pdeg(q) >= 1:
                        polys.add(q)
        out = [self.infinite_place()]
        for p in sorted(polys, key=_polykey):
            out.extend(self.places_above_poly(p))
        return out

    def divisor_of(self, z):
        from .divisors import Divisor

        z = self.coerce(z)
        if z.is_zero():
            raise ZeroElement("divisor of zero")
        supp = {}
        for pl in self.divisor_support_candidates(z):
            v = self.valuation(pl, z)
            if v:
                supp[pl] = v
        D = Divisor(self.name, supp)
        assert D.degree() == 0, "principal divisor must have degree zero"
        return D

    # -- Riemann-Roch candidate monomials ----------------------------------------------

    def candidate_basis(self, n: int):
        """Monomial basis of L(n * O): x^i (2i <= n) and x^i y (2i+3 <= n)."""
        tw = self.tw
        out = []
        for i in range(0, n // 2 + 1):
            out.append(tw.felt(Rat.x(self.k) ** i))
        for i in range(0, (n - 3) // 2 + 1):
            out.append(tw.felt(Rat.x(self.k) ** i) * tw.y)
        return out

    def cover_candidate_divisors(self, nmax, m_inf, mpos_places):
        """Divisor data used by covers when assembling candidate spaces."""
        from .divisors import Divisor

        inf = self.infinite_place()
        da = Divisor(self.name, {inf: nmax} if nmax else {})
        db_supp = {inf: nmax + m_inf} if nmax + m_inf else {}
        for (pl, m) in mpos_places:
            if m:
                db_supp[pl] = db_supp.get(pl, 0) + m
        return da, Divisor(self.name, db_supp)
