"""Dense univariate polynomial arithmetic over a finite field context.

Polynomials are tuples of field elements, lowest-degree coefficient first,
with no trailing zeros; the zero polynomial is ().  All functions take the
coefficient field as their first argument.  Factorization is deterministic:
the equal-degree splitting derives its randomness from a hash of the input.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache


def ptrim(k, f):
    f = tuple(f)
    n = len(f)
    while n and f[n - 1] == k.zero:
        n -= 1
    return f[:n]


def pdeg(f) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(f) - 1


def pconst(k, c):
    return () if c == k.zero else (c,)


def px(k):
    return (k.zero, k.one)


def padd(k, f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = k.add(out[i], c)
    return ptrim(k, out)


def pneg(k, f):
    return tuple(k.neg(c) for c in f)


def psub(k, f, g):
    return padd(k, f, pneg(k, g))


def pscale(k, f, c):
    if c == k.zero:
        return ()
    return ptrim(k, tuple(k.mul(a, c) for a in f))


def pmul(k, f, g):
    if not f or not g:
        return ()
    out = [k.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == k.zero:
            continue
        for j, b in enumerate(g):
            out[i + j] = k.add(out[i + j], k.mul(a, b))
    return ptrim(k, out)


def ppow(k, f, n: int):
    result = (k.one,)
    while n:
        if n & 1:
            result = pmul(k, result, f)
        f = pmul(k, f, f)
        n >>= 1
    return result


def pdivmod(k, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    dg = pdeg(g)
    lc_inv = k.inv(g[-1])
    q = [k.zero] * max(0, len(f) - dg)
    while len(f) - 1 >= dg and f:
        df = len(f) - 1
        c = k.mul(f[-1], lc_inv)
        q[df - dg] = c
        for i, b in enumerate(g):
            f[df - dg + i] = k.sub(f[df - dg + i], k.mul(c, b))
        f = list(ptrim(k, f))
    return ptrim(k, q), ptrim(k, f)


def pdiv(k, f, g):
    q, r = pdivmod(k, f, g)
    if r:
        raise ValueError("inexact polynomial division")
    return q


def prem(k, f, g):
    return pdivmod(k, f, g)[1]


def pgcd(k, f, g):
    f, g = ptrim(k, f), ptrim(k, g)
    while g:
        f, g = g, prem(k, f, g)
    return pmonic(k, f)


def pxgcd(k, f, g):
    """(d, s, t) with s*f + t*g = d (d not normalized to monic)."""
    r0, r1 = ptrim(k, f), ptrim(k, g)
    s0, s1 = (k.one,), ()
    t0, t1 = (), (k.one,)
    while r1:
        q, r = pdivmod(k, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(k, s0, pmul(k, q, s1))
        t0, t1 = t1, psub(k, t0, pmul(k, q, t1))
    return r0, s0, t0


def pmonic(k, f):
    if not f:
        return f
    return pscale(k, f, k.inv(f[-1]))


def peval(k, f, a):
    acc = k.zero
    for c in reversed(f):
        acc = k.add(k.mul(acc, a), c)
    return acc


def pderiv(k, f):
    out = []
    for i in range(1, len(f)):
        c = f[i]
        s = k.zero
        for _ in range(i % k.char):
            s = k.add(s, c)
        out.append(s)
    return ptrim(k, out)


def pshift(k, f, n: int):
    """Multiply by x^n."""
    if not f:
        return ()
    return (k.zero,) * n + tuple(f)


def peval_poly(k, f, g):
    """Compose: f(g)."""
    acc = ()
    for c in reversed(f):
        acc = padd(k, pmul(k, acc, g), pconst(k, c))
    return acc


def pstr(k, f, var="x"):
    if not f:
        return "0"
    parts = []
    for i, c in enumerate(f):
        if c == k.zero:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append(f"{c}*{var}" if c != k.one else var)
        else:
            parts.append(f"{c}*{var}^{i}" if c != k.one else f"{var}^{i}")
    return " + ".join(parts)


# -- irreducibility and factorization ------------------------------------


def pow_mod(k, f, n: int, m):
    result = (k.one,)
    f = prem(k, f, m)
    while n:
        if n & 1:
            result = prem(k, pmul(k, result, f), m)
        f = prem(k, pmul(k, f, f), m)
        n >>= 1
    return result


def is_irreducible(k, f) -> bool:
    """Rabin's test over GF(q)."""
    f = pmonic(k, f)
    n = pdeg(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    q = k.order
    x = px(k)
    # x^(q^n) == x mod f
    h = pow_mod(k, x, q ** n, f)
    if ptrim(k, psub(k, h, x)):
        return False
    for r in {p for p in _prime_factors(n)}:
        h = pow_mod(k, x, q ** (n // r), f)
        if len(pgcd(k, psub(k, h, x), f)) > 1:
            return False
    return True


def _prime_factors(n: int):
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def min_irreducible(k, d: int):
    """First monic irreducible of degree d in enumeration order (canonical)."""
    for tail in itertools.product(list(k.elements()), repeat=d):
        f = tuple(tail) + (k.one,)
        if is_irreducible(k, f):
            return f
    raise RuntimeError("no irreducible found")


def monic_irreducibles(k, d: int):
    """All monic irreducibles of degree exactly d, in enumeration order."""
    out = []
    for tail in itertools.product(list(k.elements()), repeat=d):
        f = tuple(tail) + (k.one,)
        if is_irreducible(k, f):
            out.append(f)
    return out


def squarefree_part_factors(k, f):
    """Squarefree factorization: list of (g_i, multiplicity)."""
    f = pmonic(k, f)
    out = []
    i = 1
    while pdeg(f) > 0:
        d = pderiv(k, f)
        if not d:
            # f is a p-th power: f = g(x^p); take p-th root
            p = k.char
            root = []
            for j in range(0, len(f), p):
                c = f[j]
                # c^(q/p)?? in GF(q) the p-th root is c^(q/p)
                root.append(k.pow(c, k.order // p))
            f = ptrim(k, root)
            i *= p
            continue
        g = pgcd(k, f, d)
        w = pdiv(k, f, g)
        j = i
        while pdeg(w) > 0:
            y = pgcd(k, w, g)
            z = pdiv(k, w, y)
            if pdeg(z) > 0:
                out.append((pmonic(k, z), j))
            w = y
            g = pdiv(k, g, y)
            j += i
        f = g
    return out


def _ddf(k, f):
    """Distinct-degree factorization of squarefree monic f: [(product, d)]."""
    out = []
    q = k.order
    x = px(k)
    h = x
    fstar = f
    d = 0
    while pdeg(fstar) >= 2 * (d + 1):
        d += 1
        h = pow_mod(k, h, q, fstar)
        g = pgcd(k, psub(k, h, x), fstar)
        if pdeg(g) > 0:
            out.append((g, d))
            fstar = pdiv(k, fstar, g)
            h = prem(k, h, fstar)
    if pdeg(fstar) > 0:
        out.append((fstar, pdeg(fstar)))
    return out


def _edf(k, f, d, rng):
    """Equal-degree factorization (Cantor-Zassenhaus), q odd."""
    n = pdeg(f)
    if n == d:
        return [f]
    q = k.order
    els = list(k.elements())
    while True:
        a = tuple(els[rng.randrange(len(els))] for _ in range(n))
        a = ptrim(k, a)
        if pdeg(a) < 1:
            continue
        g = pgcd(k, a, f)
        if 0 < pdeg(g) < n:
            pass
        else:
            b = pow_mod(k, a, (q ** d - 1) // 2, f)
            g = pgcd(k, psub(k, b, (k.one,)), f)
            if not (0 < pdeg(g) < n):
                continue
        return _edf(k, g, d, rng) + _edf(k, pdiv(k, f, g), d, rng)


def pfactor(k, f):
    """Full factorization: sorted list of (monic irreducible, multiplicity).

    Deterministic: the splitting RNG is seeded from the input.
    """
    f = ptrim(k, f)
    if pdeg(f) < 1:
        return []
    rng = random.Random(repr((k.order, f)))
    out = []
    for g, mult in squarefree_part_factors(k, f):
        for h, d in _ddf(k, g):
            for piece in _edf(k, h, d, rng):
                out.append((pmonic(k, piece), mult))
    out.sort()
    return out


def proots(k, f):
    """Roots in k, each listed once."""
    roots = []
    for g, _ in pfactor(k, f):
        if pdeg(g) == 1:
            roots.append(k.neg(g[0]))
    return sorted(set(roots), key=repr)
