"""Grid sweeps pitting the constructive decomposer against brute-force search.

For every parameter choice in a grid and every pair of canonical height
triples, the sweep decomposes each lattice point of the sum polytope through
the fiber pipeline and independently re-derives decomposability by raw set
search over the two point sets.  Both routes must agree everywhere; any
disagreement is reported, and the expected report is empty.

The audit layer additionally replays, for every reduced fiber the pipeline
produced, the row-drop/row-replace soundness (same lattice points before and
after) and the fiber-level Minkowski identity, using the fan-free rational
vertex enumerator as the independent geometry source.
"""

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from operator import sub

_run_counter = itertools.count()

from .batyrev import BatyrevParams, build_batyrev
from .decompose import Decomposer, FiberReducer
from .errors import IdpLabError, NotConvex
from .linalg import dot
from .polytope import LatticePolytope, hrep_lattice_points

# completeness resampling is pointless inside worker loops; structures get a
# fully validated build once in iter_structures callers / tests
_WORKER_FAN_SAMPLES = 32


def iter_param_grid(n_min=2, n_max=4, b_max=1, c_max=1):
    """All parameter choices with n in [n_min, n_max] and b/c entries bounded."""
    for n in range(n_min, n_max + 1):
        total = n + 3
        for p0 in range(1, total - 3):
            for p1 in range(1, total - p0 - 2):
                for p2 in range(1, total - p0 - p1 - 1):
                    for p3 in range(1, total - p0 - p1 - p2):
                        p4 = total - p0 - p1 - p2 - p3
                        for b in itertools.product(range(b_max + 1), repeat=p3):
                            for c in itertools.product(range(c_max + 1), repeat=p2 - 1):
                                yield BatyrevParams((p0, p1, p2, p3, p4), b, c)


def height_vector(st, d, e, f):
    """Raw normal-form heights without the nonnegativity guard (for rejection tests)."""
    h = [0] * (st.n + 3)
    h[0] = d
    h[st.row_u1] = f
    h[st.row_z1] = e + f
    return tuple(h)


@dataclass
class SweepReport:
    instances: int = 0
    rejected_not_convex: int = 0
    alphas: int = 0
    discrepancies: list = field(default_factory=list)
    audit_failures: list = field(default_factory=list)
    # distinct audited keys; a key audited in several worker processes counts once
    reduction_keys: set = field(default_factory=set)
    minkowski_keys: set = field(default_factory=set)

    @property
    def ok(self):
        return not self.discrepancies and not self.audit_failures

    @property
    def audited_reductions(self):
        return len(self.reduction_keys)

    @property
    def audited_minkowski(self):
        return len(self.minkowski_keys)

    def merge(self, other):
        self.instances += other.instances
        self.rejected_not_convex += other.rejected_not_convex
        self.alphas += other.alphas
        self.discrepancies.extend(other.discrepancies)
        self.audit_failures.extend(other.audit_failures)
        self.reduction_keys |= other.reduction_keys
        self.minkowski_keys |= other.minkowski_keys

    def to_dict(self):
        return {
            "instances": self.instances,
            "rejected_not_convex": self.rejected_not_convex,
            "alphas": self.alphas,
            "audited_reductions": self.audited_reductions,
            "audited_minkowski": self.audited_minkowski,
            "discrepancies": sorted(self.discrepancies),
            "audit_failures": sorted(self.audit_failures),
            "ok": self.ok,
        }


class FiberAuditor:
    """Memoized soundness checks on the fibers one sweep chunk produced.

    The seen-sets may be shared across chunks of one structure so each
    distinct (case, branch, heights) combination is audited once per process.
    """

    def __init__(self, report, seen_reductions=None, seen_minkowski=None):
        self.report = report
        self._reductions = seen_reductions if seen_reductions is not None else set()
        self._minkowski = seen_minkowski if seen_minkowski is not None else set()

    def audit(self, key, fiber):
        """Reduction equalities for theta, theta', theta+theta', plus the
        inward half of the fiber Minkowski identity.

        Inward: every sum of lattice points of the two fibers lies in the sum
        fiber.  Per halfspace row that is exactly ``min over the first point
        set + min over the second >= summed bound`` (a linear functional is
        minimized summand-wise).  The outward half, every sum-fiber lattice
        point splitting into fiber points, is established by the sweep itself:
        each such point occurs as the fiber part of some alpha, and its
        decomposition succeeds or lands in the discrepancy list.
        """
        sum_theta = tuple(a + b for a, b in zip(fiber.theta, fiber.theta2))
        sum_rtheta = tuple(a + b for a, b in zip(fiber.reduced_theta,
                                                 fiber.reduced_theta2))
        for theta, rtheta, pts in (
                (fiber.theta, fiber.reduced_theta, fiber.first_points()),
                (fiber.theta2, fiber.reduced_theta2, fiber.second_points()),
                (sum_theta, sum_rtheta, None)):
            rkey = (fiber.case, fiber.branch, theta)
            if rkey not in self._reductions:
                self._reductions.add(rkey)
                self.report.reduction_keys.add(rkey)
                if pts is None:
                    pts = LatticePolytope(fiber.reduced_fan, rtheta,
                                          _skip_convexity=True).lattice_points()
                if hrep_lattice_points(fiber.F, theta) != pts:
                    self.report.audit_failures.append(
                        (key, "reduction", fiber.case, fiber.branch, theta, rtheta))
        mkey = (fiber.case, fiber.branch, fiber.reduced_theta, fiber.reduced_theta2)
        if mkey not in self._minkowski:
            self._minkowski.add(mkey)
            self.report.minkowski_keys.add(mkey)
            ppts, qpts = fiber.first_points(), fiber.second_points()
            for r, row in enumerate(fiber.reduced_rows):
                if min(dot(row, p) for p in ppts) + min(dot(row, q) for q in qpts) \
                        < -sum_rtheta[r]:
                    self.report.audit_failures.append(
                        (key, "fiber_minkowski", fiber.case, fiber.branch,
                         fiber.reduced_theta, fiber.reduced_theta2))
                    break


def _grouped_points(st, triple, cache):
    """Lattice points of the normal-form polytope, plus a by-slice index.

    Normal-form heights add componentwise, so one cache serves the two
    summands and their sum alike.
    """
    entry = cache.get(triple) if cache is not None else None
    if entry is None:
        h = height_vector(st, *triple)
        pts = LatticePolytope(st.fan, h, enum_order=st.enum_order,
                              _skip_convexity=True).lattice_points()
        ns = st.num_s
        by_j = {}
        for pt in pts:
            by_j.setdefault(pt[ns:], []).append(pt[:ns])
        entry = (pts, {j: (tuple(s), frozenset(s)) for j, s in by_j.items()})
        if cache is not None:
            cache[triple] = entry
    return entry


def check_instance(st, hp, hq, reducer=None, auditor=None, report=None, cache=None):
    """Run one (structure, heights, heights') instance.

    Every lattice point of the sum polytope is decomposed constructively and,
    independently, by raw search over the two cached point sets; any point
    where either route fails lands in ``report.discrepancies``.
    """
    if report is None:
        report = SweepReport()
    key = (st.params.p, st.params.b, st.params.c, hp, hq)
    h = height_vector(st, *hp)
    h2 = height_vector(st, *hq)
    try:
        dec = Decomposer(st, h, h2, reducer=reducer)
    except NotConvex:
        report.rejected_not_convex += 1
        return report
    report.instances += 1

    sum_triple = tuple(a + b for a, b in zip(hp, hq))
    _, p_by_j = _grouped_points(st, hp, cache)
    _, q_by_j = _grouped_points(st, hq, cache)
    _, sum_by_j = _grouped_points(st, sum_triple, cache)

    decompose = dec.decompose
    for a_j, (alpha_s_list, _) in sum_by_j.items():
        pairs = []
        for pj, (slist, _) in p_by_j.items():
            qentry = q_by_j.get(tuple(map(sub, a_j, pj)))
            if qentry is not None:
                pairs.append((slist, qentry[1]))
        for a_s in alpha_s_list:
            report.alphas += 1
            brute_ok = False
            for slist, qset in pairs:
                for bs in slist:
                    if tuple(map(sub, a_s, bs)) in qset:
                        brute_ok = True
                        break
                if brute_ok:
                    break
            try:
                decompose(a_s + a_j)
                constructive_ok = True
            except IdpLabError:
                constructive_ok = False
            if not (brute_ok and constructive_ok):
                report.discrepancies.append(
                    (key, a_s + a_j, "brute" if not brute_ok else "constructive"))

    if auditor is not None:
        for _, _, fiber in dec._fiber_cache.values():
            auditor.audit(key, fiber)
    return report


_structure_cache = {}


def _cached_structure(token, params):
    # keyed by run token so forked workers never reuse a previous run's
    # memoization state (that would make audit bookkeeping nondeterministic)
    key = (token, params)
    entry = _structure_cache.get(key)
    if entry is None:
        st = build_batyrev(params, completeness_samples=_WORKER_FAN_SAMPLES)
        entry = (st, FiberReducer(st), set(), set(), {})
        _structure_cache.clear()  # chunks arrive grouped; keep one structure alive
        _structure_cache[key] = entry
    return entry


def _run_chunk(args):
    token, params, hp, hq_list, audit = args
    st, reducer, seen_red, seen_mink, cache = _cached_structure(token, params)
    report = SweepReport()
    auditor = FiberAuditor(report, seen_red, seen_mink) if audit else None
    for hq in hq_list:
        check_instance(st, hp, hq, reducer=reducer, auditor=auditor,
                       report=report, cache=cache)
    return report


def run_sweep(n_min=2, n_max=4, b_max=1, c_max=1, height_values=(0, 1, 2),
              workers=1, audit=True, max_instances=None):
    """Sweep the whole grid; returns a SweepReport (expected: report.ok).

    ``height_values`` feeds all six canonical parameters on both sides;
    negative values are allowed and are counted as rejected, not failed.
    """
    triples = sorted(itertools.product(height_values, repeat=3))
    token = (os.getpid(), next(_run_counter))
    chunks = []
    for params in iter_param_grid(n_min, n_max, b_max, c_max):
        for hp in triples:
            chunks.append((token, params, hp, triples, audit))
    total_instances = len(chunks) * len(triples)
    if max_instances is not None and total_instances > max_instances:
        raise ValueError(
            f"grid has {total_instances} instances, over the cap {max_instances}")

    report = SweepReport()
    if workers <= 1:
        for chunk in chunks:
            report.merge(_run_chunk(chunk))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_run_chunk, chunks, chunksize=8):
                report.merge(part)
    report.discrepancies.sort()
    report.audit_failures.sort()
    return report
