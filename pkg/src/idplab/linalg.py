"""Exact integer linear algebra on tuples.

Vectors are tuples of Python ints, matrices are tuples of row tuples; all
arithmetic is arbitrary precision, nothing here ever touches floats.
"""

from math import gcd
from operator import add, mul, sub


def vec_add(v, w):
    if len(v) != len(w):
        raise ValueError("vector length mismatch")
    return tuple(map(add, v, w))


def vec_sub(v, w):
    if len(v) != len(w):
        raise ValueError("vector length mismatch")
    return tuple(map(sub, v, w))


def vec_scale(k, v):
    return tuple(k * a for a in v)


def dot(v, w):
    return sum(map(mul, v, w))


def mat_vec(m, v):
    return tuple(sum(map(mul, row, v)) for row in m)


def is_primitive(v):
    """True for an integer vector whose nonzero entries have gcd 1."""
    g = 0
    for a in v:
        g = gcd(g, a)
    return g == 1


def submatrix(m, rows, cols=None):
    if cols is None:
        return tuple(m[i] for i in rows)
    return tuple(tuple(m[i][j] for j in cols) for i in rows)


def determinant(m):
    """Exact determinant via fraction-free (Bareiss) elimination.

    Cofactor expansion handles sizes up to 3 directly; larger matrices go
    through Bareiss, which stays integral at every step.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = m
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(k + 1, n):
            for c in range(k + 1, n):
                a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) // prev
            a[r][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def unimodular_solve(m, b):
    """Solve m @ x = b for unimodular m; the solution is integral and unique.

    Rejects matrices with |det| != 1 so that callers cannot silently feed a
    non-smooth cone in here.
    """
    d = determinant(m)
    if d not in (1, -1):
        raise ValueError(f"matrix is not unimodular (det = {d})")
    n = len(m)
    x = []
    cols = list(zip(*m))
    for j in range(n):
        mj = tuple(zip(*(cols[:j] + [tuple(b)] + cols[j + 1:])))
        x.append(determinant(mj) // d)
    x = tuple(x)
    if mat_vec(m, x) != tuple(b):
        raise ArithmeticError("exact solve failed to verify")  # unreachable by construction
    return x


def unimodular_inverse(m):
    """Integer inverse of a unimodular matrix, as a tuple of rows.

    Fraction-free Gauss-Jordan: every intermediate entry is a minor of the
    input, so the arithmetic stays in the integers; the result is verified
    against the input before returning.
    """
    n = len(m)
    a = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(m)]
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    break
            else:
                raise ValueError("matrix is singular")
        piv = a[k][k]
        for i in range(n):
            if i == k:
                continue
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(2 * n):
                if j != k:
                    row_i[j] = (row_i[j] * piv - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = piv
    inv = []
    for i in range(n):
        di = a[i][i]
        if di == 0 or any(v % di for v in a[i][n:]):
            raise ValueError("matrix is not unimodular")
        inv.append(tuple(v // di for v in a[i][n:]))
    inv = tuple(inv)
    for i in range(n):
        for j in range(n):
            if dot(m[i], tuple(r[j] for r in inv)) != (1 if i == j else 0):
                raise ArithmeticError("inverse failed to verify")  # unreachable
    return inv


def minkowski_sum_points(s, t):
    """Pairwise sums of two finite point sets, deduplicated and lex sorted."""
    s = list(s)
    t = list(t)
    if s and t and len(s[0]) != len(t[0]):
        raise ValueError("point sets live in different dimensions")
    return tuple(sorted({vec_add(p, q) for p in s for q in t}))
