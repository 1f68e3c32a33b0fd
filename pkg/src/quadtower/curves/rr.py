"""Riemann-Roch spaces L(D) on the tower curves.

Method: clear finite poles with a polynomial A(x), so candidates are
integral away from infinity with explicit pole bounds there; candidate
spaces are monomial bases on X (recursively, for covers, two copies of X
spaces); membership becomes a finite k-linear system of order-of-vanishing
conditions, solved exactly.
"""

from __future__ import annotations

from .. import fpoly as fp
from ..linalg import k_kernel
from ..ratfunc import Rat
from .divisors import Divisor
from .places import INF, PlaceX


def _is_infinite(pl) -> bool:
    while hasattr(pl, "base"):
        pl = pl.base
    return pl.kind == INF


def _xpoly_below(pl):
    while hasattr(pl, "base"):
        pl = pl.base
    return pl.p


def _kmul(curve, c, elt):
    """Multiply a function-field element by a coefficient-field scalar."""
    tw = curve.tw
    return elt * tw.felt(Rat.const(tw.k, c))


def rr_basis(curve, G: Divisor):
    """A k-basis of L(G) = {h : div(h) + G >= 0} (plus 0), exact."""
    if G.curve != curve.name:
        raise ValueError(f"divisor on {G.curve} given to curve {curve.name}")
    tw = curve.tw
    k = curve.k

    # 1. clearing polynomial
    kp = {}
    for pl, m in G.supp.items():
        if m > 0 and not _is_infinite(pl):
            p = _xpoly_below(pl)
            need = -(-m // pl.e_over_x)
            kp[p] = max(kp.get(p, 0), need)
    Arat = Rat.one(k)
    degA = 0
    for p, e in kp.items():
        Arat = Arat * Rat(k, fp.ppow(k, p, e))
        degA += e * fp.pdeg(p)
    Afelt = tw.felt(Arat)

    # 2. condition places and orders
    cond = {}

    def _va_at(pl):
        return pl.e_over_x * kp.get(_xpoly_below(pl), 0)

    finite_cond_places = set()
    for pl in G.supp:
        if not _is_infinite(pl):
            finite_cond_places.add(pl)
    for p in kp:
        finite_cond_places.update(_places_above(curve, p))
    for pl in finite_cond_places:
        c = _va_at(pl) - G.mult(pl)
        if c > 0:
            cond[pl] = c

    inf_places = curve.infinite_places()
    n_w = {w: G.mult(w) + 2 * degA for w in inf_places}
    nmax = max(n_w.values())

    # 3. candidate space
    cands = _candidates(curve, nmax)
    if not cands:
        return []

    # 4. conditions matrix (rows = scalar conditions, columns = candidates)
    frag_rows = []
    for pl, c in sorted(cond.items(), key=lambda kv: kv[0].sort_key()):
        frags = curve.vanish_rows(pl, cands, c)
        frag_rows.append(frags)
    for w in inf_places:
        if n_w[w] < nmax:
            frags = curve.vanish_rows(w, cands, -n_w[w])
            frag_rows.append(frags)

    rows = []
    for frags in frag_rows:
        width = len(frags[0])
        for i in range(width):
            rows.append([frags[j][i] for j in range(len(cands))])

    coeffs = k_kernel(k, rows, ncols=len(cands))

    # 5. reconstruct and divide out the clearing polynomial
    out = []
    Ainv = tw.felt(Arat.inv())
    for vec in coeffs:
        h = None
        for c, cand in zip(vec, cands):
            if c == k.zero:
                continue
            term = _kmul(curve, c, cand)
            h = term if h is None else h + term
        if h is None:
            continue
        out.append(h * Ainv)

    deg = G.degree()
    if deg >= 1:
        assert len(out) == deg, (
            f"L(G) on {curve.name}: expected dim {deg}, got {len(out)}"
        )
    elif deg == 0:
        assert len(out) <= 1
    else:
        assert not out
    return out


def _places_above(curve, p):
    """All places of the curve above the monic irreducible p(x)."""
    if hasattr(curve, "places_above_poly"):
        return curve.places_above_poly(p)
    base_places = _places_above(curve.base, p)
    out = []
    for P in base_places:
        out.extend(curve.places_above(P))
    return out


def _candidates(curve, nmax):
    if hasattr(curve, "candidate_basis"):
        return curve.candidate_basis(nmax)
    # double cover: A + B*s with A, B drawn from base Riemann-Roch spaces
    base = curve.base
    o_places = base.infinite_places()
    assert len(o_places) == 1, "cover candidates assume a single base infinite place"
    O = o_places[0]
    m_inf = curve.m_at(O)
    da_supp = {O: nmax} if nmax else {}
    db_supp = {}
    if nmax + m_inf:
        db_supp[O] = nmax + m_inf
    for pl, m in curve.half_u_div.supp.items():
        if m > 0 and not _is_infinite(pl):
            db_supp[pl] = db_supp.get(pl, 0) + m
    DA = Divisor(base.name, da_supp)
    DB = Divisor(base.name, db_supp)
    abasis = rr_basis(base, DA)
    bbasis = rr_basis(base, DB)
    zero = _zero_like(curve)
    cands = []
    for a in abasis:
        cands.append(curve.compose(a, zero))
    for b in bbasis:
        cands.append(curve.compose(zero, b))
    return cands


def _zero_like(curve):
    if curve.level in ("K1", "K2", "K3"):
        return curve.tw.zero
    return curve.tw.telt("K3", (0, 0))


def rr_dim(curve, G: Divisor) -> int:
    return len(rr_basis(curve, G))
