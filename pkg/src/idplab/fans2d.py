"""Exploratory search over smooth complete 2D fans with bounded data.

Fans are cyclic counterclockwise ray sequences with unit determinants between
neighbours.  Enumeration starts from the triangle fan and the bounded family
of four-ray fans and inserts u + v between adjacent rays; fans are
deduplicated up to lattice automorphism via the rotation/reflection-minimal
self-intersection sequence.  For each fan, all convex height vectors up to a
bound are reduced to translation classes and every class pair gets an exact
IDP check.  The harness only reports findings; pass/fail totals carry no
claim beyond the grid that was actually searched.
"""

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .fan import build_fan, find_convexity_violation
from .linalg import mat_vec, unimodular_solve, vec_add, vec_sub
from .polytope import LatticePolytope, add_heights


def _det2(u, v):
    return u[0] * v[1] - u[1] * v[0]


@dataclass(frozen=True)
class Fan2D:
    """Counterclockwise primitive rays of a smooth complete fan in the plane."""
    rays: tuple

    def __post_init__(self):
        k = len(self.rays)
        if k < 3:
            raise ValueError("a complete 2D fan needs at least three rays")
        for i in range(k):
            if _det2(self.rays[i], self.rays[(i + 1) % k]) != 1:
                raise ValueError(f"rays {i},{i + 1} are not a positively oriented basis")

    @property
    def num_rays(self):
        return len(self.rays)

    def self_intersections(self):
        """a_i with u_{i-1} + u_{i+1} = a_i u_i; encodes the fan up to GL(2,Z)."""
        k = len(self.rays)
        return tuple(_det2(self.rays[i - 1], self.rays[(i + 1) % k]) for i in range(k))

    def canonical_key(self):
        seq = self.self_intersections()
        k = len(seq)
        variants = []
        for s in (seq, seq[::-1]):
            variants.extend(s[i:] + s[:i] for i in range(k))
        return min(variants)

    def subdivide(self, i):
        """Insert the sum of rays i and i+1 between them (star subdivision)."""
        k = len(self.rays)
        new = vec_add(self.rays[i], self.rays[(i + 1) % k])
        return Fan2D(self.rays[:i + 1] + (new,) + self.rays[i + 1:])

    def primitive_collections(self):
        k = len(self.rays)
        if k == 3:
            return ((0, 1, 2),)
        return tuple((i, j) for i in range(k) for j in range(i + 1, k)
                     if j - i != 1 and not (i == 0 and j == k - 1))

    def to_fan(self, **kwargs):
        return build_fan(self.rays, self.primitive_collections(), **kwargs)


def base_fans(height_bound):
    """The triangle fan plus the four-ray fans with third ray (-1, a), |a| <= bound."""
    fans = [Fan2D(((1, 0), (0, 1), (-1, -1)))]
    for a in range(-height_bound, height_bound + 1):
        fans.append(Fan2D(((1, 0), (0, 1), (-1, a), (0, -1))))
    return fans


def enumerate_fans(num_rays, height_bound):
    """All fans with the given ray count reachable from the base family.

    Breadth-first star subdivision with canonical-form deduplication; returns
    one representative per lattice-equivalence class, in deterministic order.
    """
    if num_rays < 3:
        raise ValueError("num_rays must be at least 3")
    level = {}
    for f in base_fans(height_bound):
        if f.num_rays <= num_rays:
            level.setdefault((f.num_rays, f.canonical_key()), f)
    for k in range(3, num_rays):
        current = [f for (kk, _), f in sorted(level.items()) if kk == k]
        for f in current:
            for i in range(f.num_rays):
                g = f.subdivide(i)
                level.setdefault((g.num_rays, g.canonical_key()), g)
    return [f for (k, _), f in sorted(level.items()) if k == num_rays]


def convex_height_classes(fan, bound):
    """Translation classes of convex heights with entries in [0, bound].

    Each class is keyed by the height vector of the polytope translated so
    its first-cone vertex sits at the origin; the gauged vector also serves
    as the class representative.
    """
    k = fan.nrays
    cone0 = fan.maximal_cones[0]
    rows0 = tuple(fan.rays[r] for r in cone0)
    classes = {}
    for h in itertools.product(range(bound + 1), repeat=k):
        if find_convexity_violation(fan, h) is not None:
            continue
        m = unimodular_solve(rows0, tuple(-h[r] for r in cone0))
        gauged = vec_add(h, mat_vec(fan.rays, m))
        classes.setdefault(gauged, h)
    return sorted(classes)


@dataclass
class SearchReport:
    num_rays: int
    height_bound: int
    fans: int = 0
    height_classes: int = 0
    pairs_checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def all_pass(self):
        return not self.failures

    def to_dict(self):
        return {
            "num_rays": self.num_rays,
            "height_bound": self.height_bound,
            "fans": self.fans,
            "height_classes": self.height_classes,
            "pairs_checked": self.pairs_checked,
            "failures": [
                {"rays": [list(r) for r in rays], "h": list(h), "h_prime": list(h2),
                 "witnesses": [list(w) for w in ws]}
                for rays, h, h2, ws in self.failures
            ],
            "all_pass": self.all_pass,
        }


def _scan_fan(args):
    f2d, bound, stop_on_witness = args
    fan = f2d.to_fan()
    heights = convex_height_classes(fan, bound)
    polys = [LatticePolytope(fan, h, _skip_convexity=True) for h in heights]
    sizes = [len(p.lattice_points()) for p in polys]
    order = sorted(range(len(polys)), key=lambda i: (sizes[i], heights[i]))

    pairs_checked = 0
    failures = []
    done = False
    for a, b in sorted(
            ((order[i], order[j]) for i in range(len(order)) for j in range(i, len(order))),
            key=lambda ab: (sizes[ab[0]] + sizes[ab[1]], heights[ab[0]], heights[ab[1]])):
        p, q = polys[a], polys[b]
        pairs_checked += 1
        sum_poly = LatticePolytope(fan, add_heights(p.h, q.h), _skip_convexity=True)
        q_set = q.point_set()
        p_pts = p.lattice_points()
        witnesses = [alpha for alpha in sum_poly.lattice_points()
                     if not any(vec_sub(alpha, beta) in q_set for beta in p_pts)]
        if witnesses:
            failures.append((f2d.rays, p.h, q.h, tuple(witnesses)))
            if stop_on_witness:
                done = True
                break
    return len(heights), pairs_checked, failures, done


def search(num_rays, height_bound, *, stop_on_witness=False, max_instances=None,
           workers=1, fans=None):
    """IDP-check every height-class pair on every fan of the grid.

    With ``stop_on_witness`` each fan's scan stops at its first failure, and
    pairs are visited smallest-polytopes-first so counterexamples surface
    early.  ``max_instances`` refuses oversized grids up front.
    """
    if fans is None:
        fans = enumerate_fans(num_rays, height_bound)
    report = SearchReport(num_rays=num_rays, height_bound=height_bound)
    report.fans = len(fans)
    if max_instances is not None:
        est = 0
        for f in fans:
            nh = len(convex_height_classes(f.to_fan(), height_bound))
            est += nh * (nh + 1) // 2
        if est > max_instances:
            raise ValueError(f"estimated {est} pairs exceeds cap {max_instances}")

    tasks = [(f, height_bound, stop_on_witness) for f in fans]
    if workers <= 1:
        results = [_scan_fan(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_fan, tasks))
    for nh, pairs, fails, _ in results:
        report.height_classes += nh
        report.pairs_checked += pairs
        report.failures.extend(fails)
    return report
