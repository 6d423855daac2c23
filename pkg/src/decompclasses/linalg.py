"""Exact dense linear algebra over the rationals and finite fields.

Matrices are lists of rows.  Entries are ints / Fractions (characteristic 0)
or :class:`~decompclasses.fields.FFElement` values.  Integer and rational
matrices go through fraction-free Bareiss elimination; everything else uses
ordinary Gauss-Jordan elimination with exact division.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm

from .fields import FFElement


def _is_rational(rows) -> bool:
    return all(not isinstance(x, FFElement) for row in rows for x in row)


def _integer_rows(rows) -> list[list[int]]:
    out = []
    for row in rows:
        den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        out.append([int(Fraction(x) * den) for x in row])
    return out


def _bareiss_rank(m: list[list[int]]) -> int:
    m = [row[:] for row in m]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank, prev = 0, 1
    for c in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][c]
        for r in range(rank + 1, nrows):
            f = m[r][c]
            row_r, row_p = m[r], m[rank]
            for j in range(c + 1, ncols):
                row_r[j] = (pv * row_r[j] - f * row_p[j]) // prev
            row_r[c] = 0
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_mod_p(rows, p: int) -> int:
    """Rank of an integer matrix reduced modulo the prime ``p``."""
    m = [[x % p for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(nrows):
            if r != rank and m[r][c]:
                f = m[r][c]
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def row_reduce(rows):
    """Reduced row echelon form over a field.  Returns ``(rref, pivots)``."""
    m = [list(row) for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c] if isinstance(m[r][c], FFElement) else Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(rows) -> int:
    if not rows or not rows[0]:
        return 0
    if _is_rational(rows):
        return _bareiss_rank(_integer_rows(rows))
    return len(row_reduce(rows)[1])


def nullspace(rows, ncols: int | None = None, one=None):
    """Basis of ``{v : rows @ v = 0}`` as a list of vectors.

    ``one`` is the multiplicative identity of the field (defaults to
    ``Fraction(1)``); it is needed when ``rows`` is empty.
    """
    if ncols is None:
        ncols = len(rows[0])
    if one is None:
        one = next((x**0 for row in rows for x in row if isinstance(x, FFElement)), Fraction(1))
    zero = one - one
    if not rows:
        return [[one if i == j else zero for i in range(ncols)] for j in range(ncols)]
    rref, pivots = row_reduce(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for i, pc in enumerate(pivots):
            v[pc] = -rref[i][f]
        basis.append(v)
    return basis


def identity(n: int, one=1, zero=0):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def matmul(a, b):
    bt = list(zip(*b))
    out = []
    for row in a:
        out.append([sum((x * y for x, y in zip(row, col)), start=row[0] * 0) for col in bt])
    return out


def matpow(a, e: int):
    n = len(a)
    one = a[0][0] ** 0 if isinstance(a[0][0], FFElement) else 1
    result = identity(n, one, one - one)
    base = a
    while e:
        if e & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        e >>= 1
    return result


def shift(a, t):
    """``a - t*I``."""
    return [[x - t if i == j else x for j, x in enumerate(row)] for i, row in enumerate(a)]


def charpoly(a):
    """Coefficients of ``det(tI - a)``, highest degree first (Berkowitz, division-free)."""
    n = len(a)
    if n == 0:
        return [1]
    one = a[0][0] ** 0 if isinstance(a[0][0], FFElement) else 1
    zero = one - one
    # Berkowitz: build the Toeplitz vectors for the trailing principal submatrices
    vec = [one, -a[0][0]]
    for r in range(1, n):
        s_col = [a[i][r] for i in range(r)]  # column above the diagonal
        r_row = a[r][:r]  # row left of the diagonal
        sub = [row[:r] for row in a[:r]]
        t = [one, -a[r][r]]
        powv = s_col
        for _ in range(r):
            t.append(-sum((x * y for x, y in zip(r_row, powv)), start=zero))
            powv = [sum((sub[i][j] * powv[j] for j in range(r)), start=zero) for i in range(r)]
        # multiply lower-triangular Toeplitz matrix (first column t) by vec
        new = []
        for i in range(r + 2):
            new.append(sum((t[i - j] * vec[j] for j in range(len(vec)) if 0 <= i - j < len(t)), start=zero))
        vec = new
    return vec
