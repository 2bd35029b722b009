"""Constructive Minkowski decomposition of lattice points over the pentagon family.

Given convex heights h, h' on a five-collection structure and a lattice point
alpha of P(A,h) + P(A,h'), this produces beta in P(A,h) and gamma in P(A,h')
with beta + gamma = alpha.  The route: project to the slice simplex, split the
slice coordinates (with a partial-sum constraint over the t-block choosing a
"low" or "high" branch), slice both polytopes into fibers, rewrite each fiber
over a splitting fan according to one of four shape cases, and search the
fiber for one summand.  Every certificate is re-validated by direct halfspace
membership before it is returned.
"""

from dataclasses import dataclass
from functools import lru_cache
from operator import sub

from . import fan as fanmod
from .batyrev import canonical_height, heights_from_canonical
from .errors import ConvexityPostcheckFailed, NoLatticePoint, PointNotInSum
from .linalg import mat_vec, vec_add, vec_sub
from .polytope import LatticePolytope


@dataclass(frozen=True)
class DecompositionCertificate:
    alpha: tuple
    beta: tuple
    gamma: tuple
    case: int
    branch: str

    def to_dict(self):
        return {"alpha": list(self.alpha), "beta": list(self.beta),
                "gamma": list(self.gamma), "case": self.case, "branch": self.branch}


@dataclass(frozen=True)
class FiberProblem:
    case: int
    branch: str
    F: tuple
    theta: tuple
    theta2: tuple
    reduced_rows: tuple      # rows of the reduced matrix
    reduced_theta: tuple
    reduced_theta2: tuple
    reduced_fan: object

    def first_points(self):
        """Lattice points of the first fiber polytope (cached, lex order)."""
        pts = self.__dict__.get("_first_points")
        if pts is None:
            pts = LatticePolytope(self.reduced_fan, self.reduced_theta,
                                  _skip_convexity=True).lattice_points()
            object.__setattr__(self, "_first_points", pts)
        return pts

    def second_points(self):
        """Lattice points of the second fiber polytope (cached, lex order)."""
        pts = self.__dict__.get("_second_points")
        if pts is None:
            pts = LatticePolytope(self.reduced_fan, self.reduced_theta2,
                                  _skip_convexity=True).lattice_points()
            object.__setattr__(self, "_second_points", pts)
        return pts

    def first_point_set(self):
        pts = self.__dict__.get("_first_set")
        if pts is None:
            pts = frozenset(self.first_points())
            object.__setattr__(self, "_first_set", pts)
        return pts

    def second_point_set(self):
        pts = self.__dict__.get("_second_set")
        if pts is None:
            pts = frozenset(self.second_points())
            object.__setattr__(self, "_second_set", pts)
        return pts


def structure_case(params):
    """Which of the four fiber shapes applies, from (p1, p4)."""
    p1, p4 = params.p[1], params.p[4]
    if p1 == 1 and p4 == 1:
        return 1
    if p1 >= 2 and p4 >= 2:
        return 2
    if p1 > 1:
        return 3
    return 4


@lru_cache(maxsize=None)
def _projective_fan(dim):
    return fanmod.projective_fan(dim)


def project_to_simplex(st, ch):
    """Dilation factor of the slice simplex: the polytope projects onto (e+f) times
    the standard |J|-simplex.  Cross-validated against the projected halfspace data."""
    scale = ch.e + ch.f
    num_j = st.num_j
    pf = _projective_fan(num_j)
    kh = (0,) * num_j + (scale,)
    verts = set(LatticePolytope(pf, kh).vertices())
    expected = {tuple(0 for _ in range(num_j))}
    if scale > 0:
        for i in range(num_j):
            expected.add(tuple(scale if j == i else 0 for j in range(num_j)))
    if verts != expected:
        raise AssertionError("projection is not the expected dilated simplex")  # unreachable
    return scale, num_j


def split_simplex_point(alpha_j, ef, ef2, num_t):
    """Split a point of the combined slice simplex into simplex points of the parts.

    ``ef = (e, f)`` and ``ef2 = (e', f')`` are the canonical parameters of the
    two summands; ``num_t`` is how many leading coordinates form the t-block.
    The t-block partial sum lands in [0, f] / [0, f'] on the low branch and in
    [f, f+e] / [f', f'+e'] on the high branch; a boundary total goes low.
    The fill is greedy: the t-block sum of beta is maximized inside its branch
    window, then coordinates are filled left to right.
    """
    e, f = ef
    e2, f2 = ef2
    alpha_j = tuple(alpha_j)
    total = sum(alpha_j)
    if any(a < 0 for a in alpha_j) or total > e + f + e2 + f2:
        raise ValueError(f"{alpha_j} lies outside the combined dilated simplex")
    s_t = sum(alpha_j[:num_t])
    if s_t <= f + f2:
        bt = min(s_t, f)
    else:
        bt = min(f + e, s_t - f2)
    bz = min(total - s_t, e + f - bt)

    beta = []
    rem = bt
    for a in alpha_j[:num_t]:
        take = min(a, rem)
        beta.append(take)
        rem -= take
    rem = bz
    for a in alpha_j[num_t:]:
        take = min(a, rem)
        beta.append(take)
        rem -= take
    beta = tuple(beta)
    return beta, vec_sub(alpha_j, beta)


def fiber_heights(st, ch, point_j):
    """Heights of the fiber polytope over a fixed slice point.

    Only v1, u1 and y1 carry nonzero entries: d, f plus the b/c-weighted slice
    coordinates, and the (b+1)/c-weighted slice coordinates respectively.
    """
    p3 = len(st.rows_t)
    tpart = point_j[:p3]
    zpart = point_j[p3:]
    b, c = st.params.b, st.params.c
    theta = [0] * (st.num_s + 2)
    theta[0] = ch.d
    cz = sum(ci * zi for ci, zi in zip(c, zpart))
    theta[st.row_u1] = ch.f + sum(bi * ti for bi, ti in zip(b, tpart)) + cz
    theta[st.row_y1] = sum((bi + 1) * ti for bi, ti in zip(b, tpart)) + cz
    return tuple(theta)


class FiberReducer:
    """Builds and caches the reduced splitting fans of one structure."""

    def __init__(self, st):
        self.st = st
        self.case = structure_case(st.params)
        self._fans = {}

    def _collections(self, branch):
        st = self.st
        p0, p4 = st.params.p[0], st.params.p[4]
        v = tuple(range(p0))
        u = (st.row_u1,) + st.rows_u
        y = (st.row_y1,) + st.rows_y
        if self.case == 2:
            return (v + u, y) if branch == "high" else (v + y, u)
        if self.case == 3:
            return (v + u, y)
        return (v + y, u)

    def _reduced_fan(self, branch, rows):
        key = branch if self.case == 2 else "both"
        fan = self._fans.get(key)
        if fan is None:
            if self.case == 1:
                fan = _projective_fan(self.st.params.p[0])
            else:
                fan = fanmod.build_fan(rows, self._collections(branch))
            self._fans[key] = fan
        return fan

    def reduce(self, theta, theta2, branch):
        """Rewrite both fiber height vectors over the splitting fan of the branch.

        Case 1 drops the non-binding one of the two identical cap rows; cases
        3 and 4 overwrite the non-supporting cap with the binding one; case 2
        keeps everything and only the collection structure reflects the branch.
        """
        st = self.st
        F = st.F
        iu, iy = st.row_u1, st.row_y1
        case = self.case
        if case == 1:
            drop = iy if branch == "high" else iu
            keep = tuple(i for i in range(len(F)) if i != drop)
            rows = tuple(F[i] for i in keep)
            rtheta = tuple(theta[i] for i in keep)
            rtheta2 = tuple(theta2[i] for i in keep)
        else:
            rows = F
            rtheta, rtheta2 = theta, theta2
            if case == 3 and branch == "low":
                rtheta = _replace(theta, iu, theta[iy])
                rtheta2 = _replace(theta2, iu, theta2[iy])
            elif case == 4 and branch == "high":
                rtheta = _replace(theta, iy, theta[iu])
                rtheta2 = _replace(theta2, iy, theta2[iu])
        rfan = self._reduced_fan(branch, rows)
        for th in (rtheta, rtheta2):
            viol = fanmod.find_convexity_violation(rfan, th)
            if viol is not None:
                raise ConvexityPostcheckFailed(
                    f"case {case} {branch}: reduced heights {th} fail convexity at {viol}")
        return FiberProblem(case=case, branch=branch, F=F, theta=theta, theta2=theta2,
                            reduced_rows=rows, reduced_theta=rtheta,
                            reduced_theta2=rtheta2, reduced_fan=rfan)


def _replace(t, i, value):
    return t[:i] + (value,) + t[i + 1:]


def reduce_fiber(st, theta, theta2, branch):
    return FiberReducer(st).reduce(theta, theta2, branch)


def decompose_in_splitting_fiber(fiber, alpha_s):
    """One lattice point of P(rows, theta) whose complement lies in P(rows, theta2).

    Scans the smaller fiber's exactly enumerated points in lex order against
    the other fiber's point set; the splitting-fan property guarantees a
    match exists, so coming up empty is reported as an internal failure.
    """
    alpha_s = tuple(alpha_s)
    first, second = fiber.first_points(), fiber.second_points()
    if len(first) <= len(second):
        second_set = fiber.second_point_set()
        for beta_s in first:
            gamma_s = tuple(map(sub, alpha_s, beta_s))
            if gamma_s in second_set:
                return beta_s, gamma_s
    else:
        first_set = fiber.first_point_set()
        for gamma_s in second:
            beta_s = tuple(map(sub, alpha_s, gamma_s))
            if beta_s in first_set:
                return beta_s, gamma_s
    raise NoLatticePoint(
        f"no lattice point in fiber intersection for alpha_S = {alpha_s}")


class Decomposer:
    """Decomposition pipeline for one (structure, h, h') instance.

    Heights may be raw or already in normal form; they are normalized up
    front and certificates are mapped back to the caller's frame.  Fiber data
    is cached per slice point, so iterating over every point of the sum
    polytope stays cheap.
    """

    def __init__(self, st, h, h2, reducer=None):
        self.st = st
        self.h_raw = tuple(h)
        self.h2_raw = tuple(h2)
        self.ch, self.shift = canonical_height(st, self.h_raw)
        self.ch2, self.shift2 = canonical_height(st, self.h2_raw)
        self.h_canon = heights_from_canonical(st, self.ch.d, self.ch.e, self.ch.f)
        self.h2_canon = heights_from_canonical(st, self.ch2.d, self.ch2.e, self.ch2.f)
        self.sum_h_raw = vec_add(self.h_raw, self.h2_raw)
        self.reducer = reducer if reducer is not None else FiberReducer(st)
        self.num_t = len(st.rows_t)
        self._fiber_cache = {}

    def _fiber_for(self, alpha_j):
        cached = self._fiber_cache.get(alpha_j)
        if cached is None:
            st = self.st
            ch, ch2 = self.ch, self.ch2
            beta_j, gamma_j = split_simplex_point(
                alpha_j, (ch.e, ch.f), (ch2.e, ch2.f), self.num_t)
            s_t = sum(alpha_j[:self.num_t])
            branch = "low" if s_t <= ch.f + ch2.f else "high"
            theta = fiber_heights(st, ch, beta_j)
            theta2 = fiber_heights(st, ch2, gamma_j)
            fiber = self.reducer.reduce(theta, theta2, branch)
            cached = (beta_j, gamma_j, fiber)
            self._fiber_cache[alpha_j] = cached
        return cached

    def decompose(self, alpha):
        alpha = tuple(alpha)
        st = self.st
        if any(v < -b for v, b in zip(mat_vec(st.A, alpha), self.sum_h_raw)):
            raise PointNotInSum(f"{alpha} is not in the Minkowski sum polytope")
        # move to the normal-form frame
        frame = vec_add(self.shift, self.shift2)
        alpha_c = vec_add(alpha, frame)
        ns = st.num_s
        alpha_s, alpha_j = alpha_c[:ns], alpha_c[ns:]
        beta_j, gamma_j, fiber = self._fiber_for(alpha_j)
        beta_s, gamma_s = decompose_in_splitting_fiber(fiber, alpha_s)
        beta = vec_sub(beta_s + beta_j, self.shift)
        gamma = vec_sub(gamma_s + gamma_j, self.shift2)
        if vec_add(beta, gamma) != alpha:
            raise AssertionError("certificate parts do not sum to alpha")  # unreachable
        for part, heights, name in ((beta, self.h_raw, "beta"), (gamma, self.h2_raw, "gamma")):
            if any(v < -b for v, b in zip(mat_vec(st.A, part), heights)):
                raise AssertionError(f"certificate validation failed for {name}")
        return DecompositionCertificate(alpha=alpha, beta=beta, gamma=gamma,
                                        case=fiber.case, branch=fiber.branch)

    def sum_lattice_points(self):
        poly = LatticePolytope(self.st.fan, self.sum_h_raw, enum_order=self.st.enum_order)
        return poly.lattice_points()

    def decompose_all(self):
        return [self.decompose(alpha) for alpha in self.sum_lattice_points()]


def decompose(st, h, h2, alpha):
    """One-shot decomposition of a single point; see Decomposer for sweeps."""
    return Decomposer(st, h, h2).decompose(alpha)
