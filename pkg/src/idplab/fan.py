"""Smooth complete fans presented by primitive ray generators and primitive collections.

A fan here is combinatorial data: the rays, plus the minimal non-faces
(primitive collections).  Maximal cones are derived, never supplied: they are
exactly the dim-element ray subsets that contain no collection.  Construction
validates smoothness (every cone unimodular) and completeness (ridge counts,
connectivity, and randomized direction coverage).
"""

import os
import random
from dataclasses import dataclass
from itertools import combinations

from .errors import CompletenessViolation, NonPrimitiveRay, NotCovered, SmoothnessViolation
from .linalg import determinant, dot, is_primitive, submatrix, unimodular_inverse, vec_add

DEFAULT_COMPLETENESS_SAMPLES = 1000
_SAMPLE_COORD_BOUND = 9


@dataclass(frozen=True)
class Fan:
    dim: int
    rays: tuple
    primitive_collections: tuple
    maximal_cones: tuple
    # per maximal cone, the integer inverse of the matrix whose columns are the
    # cone's rays; multiplying it into u yields the expansion coefficients of u
    cone_inverses: tuple

    @property
    def nrays(self):
        return len(self.rays)

    def cone_rays(self, k):
        return submatrix(self.rays, self.maximal_cones[k])

    def to_dict(self):
        return {
            "dim": self.dim,
            "rays": [list(r) for r in self.rays],
            "primitive_collections": [list(c) for c in self.primitive_collections],
        }


def _sampling_seed(seed):
    if seed is not None:
        return seed
    return int(os.environ.get("IDP_LAB_SEED", "0"))


def build_fan(rays, primitive_collections, *, completeness_samples=DEFAULT_COMPLETENESS_SAMPLES,
              seed=None):
    """Construct and fully validate a smooth complete fan.

    ``rays`` is a sequence of primitive integer vectors, ``primitive_collections``
    a sequence of ray-index sets of size >= 2.  Raises NonPrimitiveRay,
    SmoothnessViolation or CompletenessViolation on bad input.
    """
    rays = tuple(tuple(int(a) for a in r) for r in rays)
    if not rays:
        raise ValueError("a fan needs at least one ray")
    n = len(rays[0])
    if any(len(r) != n for r in rays):
        raise ValueError("rays have inconsistent dimensions")
    for r in rays:
        if not is_primitive(r):
            raise NonPrimitiveRay(f"ray {r} is not primitive")
    if len(set(rays)) != len(rays):
        raise ValueError("duplicate ray generators")

    m = len(rays)
    collections = []
    seen = set()
    for c in primitive_collections:
        c = tuple(sorted(set(int(i) for i in c)))
        if len(c) < 2:
            raise ValueError(f"primitive collection {c} has fewer than two rays")
        if any(i < 0 or i >= m for i in c):
            raise ValueError(f"primitive collection {c} has out-of-range ray indices")
        if c in seen:
            raise ValueError(f"duplicate primitive collection {c}")
        seen.add(c)
        collections.append(c)
    collections = tuple(collections)
    coll_sets = [frozenset(c) for c in collections]

    cones = []
    for subset in combinations(range(m), n):
        sub = set(subset)
        if any(cs <= sub for cs in coll_sets):
            continue
        d = determinant(submatrix(rays, subset))
        if d not in (1, -1):
            raise SmoothnessViolation(subset, d)
        cones.append(subset)
    cones = tuple(cones)
    if not cones:
        raise CompletenessViolation("no maximal cones at all")

    # Minimal-non-face property: every proper subset of a collection is a face.
    for c in collections:
        for drop in c:
            sub = frozenset(i for i in c if i != drop)
            if not any(sub <= frozenset(cone) for cone in cones):
                raise ValueError(
                    f"collection {c} is not minimal: {tuple(sorted(sub))} is not a face")

    _check_ridges(cones)

    inverses = tuple(
        unimodular_inverse(tuple(zip(*submatrix(rays, cone)))) for cone in cones)
    fan = Fan(dim=n, rays=rays, primitive_collections=collections,
              maximal_cones=cones, cone_inverses=inverses)

    _sample_directions(fan, completeness_samples, _sampling_seed(seed))
    return fan


def _check_ridges(cones):
    ridge_owners = {}
    for k, cone in enumerate(cones):
        for facet in combinations(cone, len(cone) - 1):
            ridge_owners.setdefault(facet, []).append(k)
    for facet, owners in ridge_owners.items():
        if len(owners) != 2:
            raise CompletenessViolation(
                f"ridge {facet} lies in {len(owners)} maximal cones, expected 2")
    # connectivity of the ridge graph
    adj = {k: set() for k in range(len(cones))}
    for owners in ridge_owners.values():
        a, b = owners
        adj[a].add(b)
        adj[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if len(seen) != len(cones):
        raise CompletenessViolation("ridge graph is disconnected")


def _sample_directions(fan, samples, seed):
    rng = random.Random(seed)
    n = fan.dim
    for _ in range(samples):
        u = tuple(rng.randint(-_SAMPLE_COORD_BOUND, _SAMPLE_COORD_BOUND) for _ in range(n))
        try:
            find_cone(fan, u)
        except NotCovered:
            raise CompletenessViolation(f"sampled direction {u} lies outside every cone")


def find_cone(fan, u):
    """First maximal cone containing u, with the expansion coefficients of u.

    Coefficients are the unique nonnegative integers expressing an integer u
    over the cone's rays (integrality comes from smoothness).  Boundary points
    resolve to the first containing cone in construction order.
    """
    for k, inv in enumerate(fan.cone_inverses):
        coeffs = []
        ok = True
        for row in inv:
            c = dot(row, u)
            if c < 0:
                ok = False
                break
            coeffs.append(c)
        if ok:
            return k, tuple(coeffs)
    raise NotCovered(f"{u} is not covered by any maximal cone")


def support_value(fan, h, u):
    """Value at u of the support function taking -h[rho] at each ray generator."""
    k, coeffs = find_cone(fan, u)
    cone = fan.maximal_cones[k]
    return sum(-h[r] * c for r, c in zip(cone, coeffs))


def _collection_table(fan):
    """Cone expansions of each collection's generator sum (height independent)."""
    table = fan.__dict__.get("_coll_table")
    if table is None:
        table = []
        for coll in fan.primitive_collections:
            s = fan.rays[coll[0]]
            for r in coll[1:]:
                s = vec_add(s, fan.rays[r])
            k, coeffs = find_cone(fan, s)
            support = tuple((r, c) for r, c in zip(fan.maximal_cones[k], coeffs) if c)
            table.append((coll, support))
        table = tuple(table)
        object.__setattr__(fan, "_coll_table", table)
    return table


def find_convexity_violation(fan, h, *, strict=False):
    """The first primitive collection violating the convexity inequality, or None.

    The support function is convex iff its value at the sum of each
    collection's generators dominates the sum of its values at the generators;
    strict convexity needs the strict inequality.
    """
    for coll, support in _collection_table(fan):
        lhs = -sum(h[r] * c for r, c in support)
        rhs = -sum(h[r] for r in coll)
        if lhs < rhs or (strict and lhs == rhs):
            return coll
    return None


def is_convex(fan, h):
    return find_convexity_violation(fan, h) is None


def is_strictly_convex(fan, h):
    return find_convexity_violation(fan, h, strict=True) is None


def is_splitting(fan):
    """True when the primitive collections are pairwise disjoint."""
    colls = fan.primitive_collections
    for i in range(len(colls)):
        si = set(colls[i])
        for j in range(i + 1, len(colls)):
            if si.intersection(colls[j]):
                return False
    return True


def projective_fan(n, **kwargs):
    """The fan of n-dimensional projective space: basis rays plus their negative sum."""
    rays = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    rays.append(tuple(-1 for _ in range(n)))
    return build_fan(rays, [tuple(range(n + 1))], **kwargs)


def fan_from_dict(data, **kwargs):
    fan = build_fan(data["rays"], data["primitive_collections"], **kwargs)
    if "dim" in data and int(data["dim"]) != fan.dim:
        raise ValueError(f"spec says dim {data['dim']} but rays live in R^{fan.dim}")
    return fan
