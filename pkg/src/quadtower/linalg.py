"""Exact dense linear algebra, in two flavours.

Context flavour: matrices are lists of lists of plain field data, with a
field object supplying arithmetic (used for finite-field systems).

Duck flavour: entries are objects with +, -, *, / and == (Fraction, rational
functions, tower elements); callers pass exemplar zero/one elements.
"""

from __future__ import annotations


# -- context flavour -------------------------------------------------------


def k_rref(k, rows):
    """Reduced row echelon form; returns (rref_rows, pivot_columns)."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != k.zero), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = k.inv(rows[r][c])
        rows[r] = [k.mul(inv, v) for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != k.zero:
                factor = rows[i][c]
                rows[i] = [k.sub(v, k.mul(factor, w)) for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def k_kernel(k, rows, ncols=None):
    """Basis of the right kernel of the matrix (rows over field k)."""
    if not rows:
        if ncols is None:
            raise ValueError("need ncols for an empty matrix")
        basis = []
        for i in range(ncols):
            v = [k.zero] * ncols
            v[i] = k.one
            basis.append(v)
        return basis
    ncols = len(rows[0])
    rref, pivots = k_rref(k, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [k.zero] * ncols
        v[fc] = k.one
        for r, pc in enumerate(pivots):
            v[pc] = k.neg(rref[r][fc])
        basis.append(v)
    return basis


def k_rank(k, rows):
    if not rows:
        return 0
    return len(k_rref(k, rows)[0])


def k_solve(k, rows, rhs):
    """One solution x of A x = b, or None if inconsistent."""
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    rref, pivots = k_rref(k, aug)
    for row in rref:
        if all(v == k.zero for v in row[:-1]) and row[-1] != k.zero:
            return None
    if ncols in pivots:
        return None
    x = [k.zero] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = rref[r][-1]
    return x


# -- duck flavour -----------------------------------------------------------


def rref(rows, zero):
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != zero), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c]
        rows[r] = [v / inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != zero:
                f = rows[i][c]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def kernel(rows, zero, one, ncols=None):
    if not rows:
        if ncols is None:
            raise ValueError("need ncols for an empty matrix")
        out = []
        for i in range(ncols):
            v = [zero] * ncols
            v[i] = one
            out.append(v)
        return out
    ncols = len(rows[0])
    rr, pivots = rref(rows, zero)
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = zero - rr[r][fc]
        out.append(v)
    return out


def solve(rows, rhs, zero):
    """One solution of A x = b, or None."""
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    rr, pivots = rref(aug, zero)
    for row in rr:
        if all(v == zero for v in row[:-1]) and row[-1] != zero:
            return None
    if ncols in pivots:
        return None
    x = [zero] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = rr[r][-1]
    return x


def rank(rows, zero):
    if not rows:
        return 0
    return len(rref(rows, zero)[0])


def det(rows, zero, one):
    """Determinant by fraction-free-ish elimination (entries form a field)."""
    n = len(rows)
    rows = [list(r) for r in rows]
    d = one
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c] != zero), None)
        if piv is None:
            return zero
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            d = zero - d
        d = d * rows[c][c]
        inv = rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != zero:
                f = rows[i][c] / inv
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[c])]
    return d
