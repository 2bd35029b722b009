"""Exact polytopes P(A, h) = {x : A x >= -h} over a validated fan.

Vertices come from unimodular cone solves, lattice points from a recursive
box scan that applies every halfspace as soon as all of its coordinates are
fixed.  A fan-free 2D point-set mode backs the counterexample fixture where
no fan is given.  ``rational_vertices`` and ``hrep_lattice_points`` work on a
bare halfspace system with no fan at all; they are the slow, obviously
correct route used to audit the fan-backed one.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, floor

from .errors import NotConvex
from .fan import find_convexity_violation
from .linalg import determinant, mat_vec, vec_add, vec_sub


def add_heights(h, h2):
    """Componentwise sum; the polytope of the sum is the Minkowski sum."""
    return vec_add(h, h2)


class LatticePolytope:
    """Either fan-backed (A, h with h convex) or a bare 2D lattice point set."""

    def __init__(self, fan, h, *, enum_order=None, _skip_convexity=False):
        if not _skip_convexity:
            viol = find_convexity_violation(fan, h)
            if viol is not None:
                raise NotConvex(viol)
        self.fan = fan
        self.h = tuple(h)
        self.dim = fan.dim
        self._enum_order = tuple(enum_order) if enum_order is not None else None
        self._vertices = None
        self._lattice_points = None
        self._point_set = None

    @classmethod
    def from_points(cls, points):
        """Convex hull of explicit 2D lattice points, without any fan."""
        pts = [tuple(int(a) for a in p) for p in points]
        if not pts:
            raise ValueError("need at least one point")
        if any(len(p) != 2 for p in pts):
            raise ValueError("point-set mode is 2D only")
        self = object.__new__(cls)
        self.fan = None
        self.h = None
        self.dim = 2
        self._enum_order = None
        self._vertices = _hull2d(pts)
        self._lattice_points = _hull2d_lattice_points(self._vertices)
        self._point_set = None
        return self

    def vertices(self):
        """One candidate per maximal cone, kept if feasible; deduplicated, sorted."""
        if self._vertices is None:
            fan, h = self.fan, self.h
            neg_h = tuple(-v for v in h)
            found = set()
            for cone, inv in zip(fan.maximal_cones, fan.cone_inverses):
                rhs = tuple(neg_h[r] for r in cone)
                # rows of A_sigma^{-1} = columns of inv
                m = mat_vec(tuple(zip(*inv)), rhs)
                if all(v >= b for v, b in zip(mat_vec(fan.rays, m), neg_h)):
                    found.add(m)
            self._vertices = tuple(sorted(found))
        return self._vertices

    def lattice_points(self):
        if self._lattice_points is None:
            self._lattice_points = _enumerate_lattice_points(
                self.fan.rays, self.h, self.vertices(), self._enum_order)
        return self._lattice_points

    def point_set(self):
        if self._point_set is None:
            self._point_set = frozenset(self.lattice_points())
        return self._point_set

    def contains(self, x):
        if self.fan is None:
            return tuple(x) in self.point_set()
        return all(v >= -b for v, b in zip(mat_vec(self.fan.rays, x), self.h))


def iter_box_lattice_points(rows, h, lo, hi, order=None):
    """Yield integer points of {x : rows @ x >= -h} inside the box [lo, hi].

    Coordinates are scanned in ``order`` (default: as given); every constraint
    prunes the scan at the depth where its last coordinate is fixed, so the
    final depth applies all of them and every yielded point is feasible.
    Yield order is lexicographic in the scan order.
    """
    n = len(lo)
    order = tuple(order) if order else tuple(range(n))

    # per depth: constraints (coeffs over earlier scan positions, a_k, bound)
    closing = [[] for _ in range(n)]
    for row, hr in zip(rows, h):
        supp = [k for k in range(n) if row[order[k]] != 0]
        if not supp:
            if hr < 0:
                return
            continue
        k = max(supp)
        closing[k].append((tuple(row[order[j]] for j in range(k)), row[order[k]], -hr))

    prefix = [0] * n

    def scan(depth):
        jcol = order[depth]
        lo_d, hi_d = lo[jcol], hi[jcol]
        for coeffs, a, bound in closing[depth]:
            rest = bound - sum(c * prefix[j] for j, c in enumerate(coeffs) if c)
            if a > 0:
                q = -((-rest) // a)
                if q > lo_d:
                    lo_d = q
            else:
                q = rest // a
                if q < hi_d:
                    hi_d = q
        if depth == n - 1:
            for val in range(lo_d, hi_d + 1):
                prefix[depth] = val
                pt = [0] * n
                for k in range(n):
                    pt[order[k]] = prefix[k]
                yield tuple(pt)
        else:
            for val in range(lo_d, hi_d + 1):
                prefix[depth] = val
                yield from scan(depth + 1)

    yield from scan(0)


def _enumerate_lattice_points(rows, h, vertices, enum_order):
    """All lattice points, lex sorted; the box comes from the exact vertices."""
    if not vertices:
        return ()
    n = len(vertices[0])
    lo = [min(v[j] for v in vertices) for j in range(n)]
    hi = [max(v[j] for v in vertices) for j in range(n)]
    return tuple(sorted(iter_box_lattice_points(rows, h, lo, hi, enum_order)))


def rational_vertices(rows, h):
    """Exact vertices of {x : rows @ x >= -h} by basic-solution enumeration.

    Every maximal square subsystem with nonzero determinant is solved over
    the rationals and kept when feasible.  Quadratic-ish and fan-free; meant
    for small systems and cross-checks, not for the hot path.
    """
    m, n = len(rows), len(rows[0])
    verts = set()
    for sub in combinations(range(m), n):
        msub = [rows[i] for i in sub]
        d = determinant(msub)
        if d == 0:
            continue
        x = []
        for j in range(n):
            mj = tuple(tuple(-h[sub[i]] if k == j else msub[i][k] for k in range(n))
                       for i in range(n))
            x.append(Fraction(determinant(mj), d))
        if all(sum(a * xx for a, xx in zip(row, x)) >= -hh for row, hh in zip(rows, h)):
            verts.add(tuple(x))
    return tuple(sorted(verts))


def hrep_lattice_points(rows, h):
    """Lattice points of a bare bounded halfspace system, via rational_vertices."""
    verts = rational_vertices(rows, h)
    if not verts:
        return ()
    n = len(verts[0])
    lo = [ceil(min(v[j] for v in verts)) for j in range(n)]
    hi = [floor(max(v[j] for v in verts)) for j in range(n)]
    return tuple(sorted(iter_box_lattice_points(rows, h, lo, hi)))


def _hull2d(points):
    """Monotone-chain convex hull, counterclockwise, exact integer arithmetic."""
    pts = sorted(set(points))
    if len(pts) == 1:
        return tuple(pts)

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return tuple(lower[:-1] + upper[:-1])


def _hull2d_lattice_points(hull):
    """Lattice points of a 2D hull: box scan against the edge halfspaces."""
    if len(hull) == 1:
        return (hull[0],)
    xs = [p[0] for p in hull]
    ys = [p[1] for p in hull]
    edges = []
    k = len(hull)
    for i in range(k):
        ax, ay = hull[i]
        bx, by = hull[(i + 1) % k]
        # inward normal of edge a->b for a ccw hull
        edges.append((-(by - ay), bx - ax, -(-(by - ay) * ax + (bx - ax) * ay)))
    out = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            if all(a * x + b * y + c >= 0 for a, b, c in edges):
                out.append((x, y))
    return tuple(out)


@dataclass(frozen=True)
class IdpResult:
    witnesses: tuple

    @property
    def ok(self):
        return not self.witnesses

    def to_dict(self):
        return {"idp": "pass"} if self.ok else {"witnesses": [list(w) for w in self.witnesses]}


def idp_check(p, q):
    """Exact check of (P cap Z^n) + (Q cap Z^n) = (P + Q) cap Z^n.

    Returns the sorted points of the right side missing from the left side;
    the reverse inclusion always holds, so an empty witness tuple means pass.
    """
    if p.dim != q.dim:
        raise ValueError("polytopes live in different dimensions")
    if (p.fan is None) != (q.fan is None):
        raise ValueError("cannot mix fan-backed and point-set polytopes")
    if p.fan is not None:
        if p.fan.rays != q.fan.rays:
            raise ValueError("polytopes must share one fan")
        sum_poly = LatticePolytope(p.fan, add_heights(p.h, q.h),
                                   enum_order=p._enum_order)
    else:
        sum_poly = LatticePolytope.from_points(
            [vec_add(a, b) for a in p.vertices() for b in q.vertices()])

    p_pts = p.lattice_points()
    q_set = q.point_set()
    witnesses = []
    for alpha in sum_poly.lattice_points():
        if not any(vec_sub(alpha, beta) in q_set for beta in p_pts):
            witnesses.append(alpha)
    return IdpResult(tuple(witnesses))
