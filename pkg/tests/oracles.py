"""Slow, obviously-correct reference implementations used only by the tests.

Everything here is deliberately independent of the library's algorithms:
determinants by permutation expansion, lattice points by scanning a full box
with no pruning, vertices by Gaussian elimination over Fractions, convexity
by checking that every cone's linear piece respects every halfspace.
"""

from fractions import Fraction
from itertools import combinations, permutations, product


def perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det_oracle(m):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        term = perm_sign(perm)
        for i, j in enumerate(perm):
            term *= m[i][j]
        total += term
    return total


def box_points_oracle(rows, h, lo, hi):
    """Every integer point of the box satisfying rows @ x >= -h, no pruning."""
    out = []
    for x in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if all(sum(r * v for r, v in zip(row, x)) >= -hh for row, hh in zip(rows, h)):
            out.append(x)
    return sorted(out)


def solve_fractions(m, b):
    """Gaussian elimination over Fractions; None for singular systems."""
    n = len(m)
    a = [[Fraction(v) for v in row] + [Fraction(bv)] for row, bv in zip(m, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [v - factor * w for v, w in zip(a[r], a[col])]
    return tuple(row[n] for row in a)


def vertices_oracle(rows, h):
    """Feasible basic solutions: tight-row n-subsets solved over Fractions."""
    n = len(rows[0])
    verts = set()
    for sub in combinations(range(len(rows)), n):
        x = solve_fractions([rows[i] for i in sub], [-h[i] for i in sub])
        if x is None:
            continue
        if all(sum(r * v for r, v in zip(row, x)) >= -hh for row, hh in zip(rows, h)):
            verts.add(x)
    return sorted(verts)


def convexity_oracle(fan, h):
    """Convexity via the piecewise-linear data: every cone's linear functional
    must respect every halfspace bound; strictness needs distinct functionals
    and strict inequality off the cone."""
    pieces = []
    for cone in fan.maximal_cones:
        m = solve_fractions([fan.rays[r] for r in cone], [-h[r] for r in cone])
        pieces.append((cone, m))
    convex = all(
        sum(r * v for r, v in zip(fan.rays[rho], m)) >= -h[rho]
        for cone, m in pieces for rho in range(len(fan.rays)))
    strict = convex and all(
        sum(r * v for r, v in zip(fan.rays[rho], m)) > -h[rho]
        for cone, m in pieces for rho in range(len(fan.rays)) if rho not in cone)
    return convex, strict


def minkowski_oracle(s, t):
    return sorted({tuple(a + b for a, b in zip(p, q)) for p in s for q in t})


def pentagon_cone_count(p):
    """Number of maximal cones: sum of p_a p_b p_c over class triples whose
    complementary pair is nonadjacent on the pentagon."""
    total = 0
    for pair in combinations(range(5), 2):
        a, b = pair
        if (b - a) % 5 in (1, 4):
            continue
        prod = 1
        for k in range(5):
            if k not in pair:
                prod *= p[k]
        total += prod
    return total
