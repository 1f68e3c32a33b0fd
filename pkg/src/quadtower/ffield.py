"""Small finite fields with exact arithmetic.

Elements are plain hashable data: ints in [0, p) for prime fields, tuples of
base-field elements (length = extension degree) for extensions.  A field
object supplies the arithmetic.  This keeps elements cheap, hashable and
trivially serializable; there is never any rounding.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """The field Z/pZ.  Elements are ints in [0, p)."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.order = p
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n: int):
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a, n, self.p)

    def from_int(self, n: int):
        return n % self.p

    def elements(self):
        return range(self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    # -- squares ---------------------------------------------------------

    def is_square(self, a) -> bool:
        if a == 0:
            return True
        return pow(a, (self.p - 1) // 2, self.p) == 1

    def sqrt(self, a):
        return generic_sqrt(self, a)


class ExtField:
    """k[T]/(m(T)) for m monic irreducible over a base field k.

    Elements are tuples of length deg(m) of base-field elements,
    low-degree coefficient first.
    """

    def __init__(self, base, modulus):
        # modulus: tuple of base elements, monic, length d+1
        from . import fpoly

        if len(modulus) < 3:
            raise ValueError("extension modulus must have degree >= 2")
        if modulus[-1] != base.one:
            raise ValueError("modulus must be monic")
        self.base = base
        self.modulus = tuple(modulus)
        self.deg = len(modulus) - 1
        self.char = base.char
        self.order = base.order ** self.deg
        self.zero = (base.zero,) * self.deg
        self.one = (base.one,) + (base.zero,) * (self.deg - 1)
        self._fp = fpoly

    def _red(self, coeffs):
        """Reduce a coefficient list (any length) mod modulus; pad to deg."""
        fp = self._fp
        r = fp.prem(self.base, tuple(coeffs), self.modulus)
        r = list(r) + [self.base.zero] * (self.deg - len(r))
        return tuple(r)

    def add(self, a, b):
        bs = self.base
        return tuple(bs.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        bs = self.base
        return tuple(bs.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        bs = self.base
        return tuple(bs.neg(x) for x in a)

    def mul(self, a, b):
        fp = self._fp
        prod = fp.pmul(self.base, fp.ptrim(self.base, a), fp.ptrim(self.base, b))
        return self._red(prod)

    def inv(self, a):
        fp = self._fp
        at = fp.ptrim(self.base, a)
        if not at:
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = fp.pxgcd(self.base, at, self.modulus)
        if len(g) != 1:
            raise ZeroDivisionError("element not invertible: modulus not irreducible?")
        c = self.base.inv(g[0])
        s = fp.pscale(self.base, s, c)
        return self._red(s)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n: int):
        if n < 0:
            a, n = self.inv(a), -n
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def from_int(self, n: int):
        return (self.base.from_int(n),) + (self.base.zero,) * (self.deg - 1)

    def from_base(self, a):
        return (a,) + (self.base.zero,) * (self.deg - 1)

    def gen(self):
        """The class of T."""
        if self.deg == 1:
            return (self.base.neg(self.modulus[0]),)
        return (self.base.zero, self.base.one) + (self.base.zero,) * (self.deg - 2)

    def elements(self):
        for tup in itertools.product(list(self.base.elements()), repeat=self.deg):
            yield tup

    def __repr__(self):
        return f"GF({self.base.order}^{self.deg})"

    def __eq__(self, other):
        return (
            isinstance(other, ExtField)
            and other.base == self.base
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("ExtField", self.base, self.modulus))

    def is_square(self, a) -> bool:
        if a == self.zero:
            return True
        return self.pow(a, (self.order - 1) // 2) == self.one

    def sqrt(self, a):
        return generic_sqrt(self, a)


def generic_sqrt(k, a):
    """Square root in a finite field of odd order (Tonelli-Shanks).

    Deterministic: the auxiliary nonsquare is the first one in enumeration
    order, so canonical branch choices are reproducible.
    """
    if a == k.zero:
        return k.zero
    if not k.is_square(a):
        raise ValueError("element is not a square")
    q = k.order
    if q % 4 == 3:
        return k.pow(a, (q + 1) // 4)
    # write q-1 = 2^s * t with t odd
    t, s = q - 1, 0
    while t % 2 == 0:
        t //= 2
        s += 1
    z = next(c for c in k.elements() if c != k.zero and not k.is_square(c))
    m, c, u, r = s, k.pow(z, t), k.pow(a, t), k.pow(a, (t + 1) // 2)
    while u != k.one:
        # find least i with u^(2^i) = 1
        i, w = 0, u
        while w != k.one:
            w = k.mul(w, w)
            i += 1
        b = c
        for _ in range(m - i - 1):
            b = k.mul(b, b)
        m, c = i, k.mul(b, b)
        u = k.mul(u, c)
        r = k.mul(r, b)
    return r


@lru_cache(maxsize=None)
def GF(q: int):
    """The field with q elements, q an odd prime power.

    Extensions use the lexicographically least monic irreducible modulus,
    so GF(q) is canonical for a given q.
    """
    from . import fpoly

    if q < 3:
        raise ValueError("need an odd prime power >= 3")
    # factor q = p^m
    p = None
    for cand in range(2, q + 1):
        if q % cand == 0:
            p = cand
            break
    m = 0
    qq = q
    while qq % p == 0:
        qq //= p
        m += 1
    if qq != 1 or not is_prime(p):
        raise ValueError(f"{q} is not a prime power")
    if p == 2:
        raise ValueError("even characteristic is not supported")
    base = PrimeField(p)
    if m == 1:
        return base
    modulus = fpoly.min_irreducible(base, m)
    return ExtField(base, modulus)
