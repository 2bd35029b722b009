"""The five-collection family of smooth complete n-fans with n+3 rays.

Members are parameterized by five positive class sizes p = (p0..p4) with
sum(p) = n+3 and nonnegative coefficient lists b (length p3) and c (length
p2-1).  The five ray classes sit in a pentagon; the primitive collections are
the unions of adjacent classes.  Three distinguished rays are determined by
the rest, all others form a lattice basis.

Row order of the ray matrix is fixed once and for all:

    v1..v_{p0}, u1, u2..u_{p4}, y1, y2..y_{p1}, t1..t_{p3}, z2..z_{p2}, z1

so the first ``|S|+2`` rows form the fiber block [F | G] and the last
``|J|+1`` rows form [0 | H], with H the ray matrix of a projective space of
dimension |J|.  Column (= coordinate) order is the basis order

    v1..v_{p0}, u2..u_{p4}, y2..y_{p1}, t1..t_{p3}, z2..z_{p2}

so a point splits as (x_S, x_J) with the fiber coordinates first.
"""

from dataclasses import dataclass

from . import fan as fanmod
from .errors import NegativeCanonicalParameter, NotConvex
from .linalg import submatrix, vec_add, vec_scale


@dataclass(frozen=True)
class BatyrevParams:
    p: tuple
    b: tuple
    c: tuple

    def __post_init__(self):
        p = tuple(int(x) for x in self.p)
        b = tuple(int(x) for x in self.b)
        c = tuple(int(x) for x in self.c)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        if len(p) != 5 or any(x < 1 for x in p):
            raise ValueError(f"p must be five positive counts, got {p}")
        if len(b) != p[3]:
            raise ValueError(f"b must have length p3 = {p[3]}, got {len(b)}")
        if len(c) != p[2] - 1:
            raise ValueError(f"c must have length p2 - 1 = {p[2] - 1}, got {len(c)}")
        if any(x < 0 for x in b) or any(x < 0 for x in c):
            raise ValueError("b and c entries must be nonnegative")

    @property
    def n(self):
        return sum(self.p) - 3


@dataclass(frozen=True)
class CanonicalHeight:
    d: int
    e: int
    f: int

    def __post_init__(self):
        if min(self.d, self.e, self.f) < 0:
            raise ValueError(f"canonical parameters must be nonnegative, got {self}")


@dataclass(frozen=True)
class BatyrevStructure:
    params: BatyrevParams
    n: int
    A: tuple                 # (n+3) x n ray matrix, row order as in the module docstring
    fan: object
    labels: tuple            # row index -> "v1", "u1", ...
    rows_v: tuple
    row_u1: int
    rows_u: tuple            # u2..u_{p4}
    row_y1: int
    rows_y: tuple            # y2..y_{p1}
    rows_t: tuple
    rows_z: tuple            # z2..z_{p2}
    row_z1: int
    s_cols: tuple
    j_cols: tuple

    @property
    def num_s(self):
        return len(self.s_cols)

    @property
    def num_j(self):
        return len(self.j_cols)

    @property
    def rows_T(self):
        return tuple(range(self.num_s + 2))

    @property
    def rows_K(self):
        return tuple(range(self.num_s + 2, self.n + 3))

    @property
    def F(self):
        return submatrix(self.A, self.rows_T, self.s_cols)

    @property
    def G(self):
        return submatrix(self.A, self.rows_T, self.j_cols)

    @property
    def H(self):
        return submatrix(self.A, self.rows_K, self.j_cols)

    @property
    def enum_order(self):
        """Column order for lattice enumeration: slice coordinates first."""
        return self.j_cols + self.s_cols


def build_batyrev(params, **fan_kwargs):
    """Build the ray matrix, fan and index bookkeeping for one parameter choice."""
    if not isinstance(params, BatyrevParams):
        params = BatyrevParams(*params)
    p0, p1, p2, p3, p4 = params.p
    b, c = params.b, params.c
    n = params.n
    num_s = p0 + p4 + p1 - 2
    num_j = p3 + p2 - 1

    def basis(i):
        return tuple(1 if j == i else 0 for j in range(n))

    # column layout
    cols_v = list(range(p0))
    cols_u = list(range(p0, p0 + p4 - 1))
    cols_y = list(range(p0 + p4 - 1, num_s))
    cols_t = list(range(num_s, num_s + p3))
    cols_z = list(range(num_s + p3, n))

    u1 = [0] * n
    y1 = [0] * n
    for j in cols_v:
        u1[j] = -1
        y1[j] = -1
    for j in cols_u:
        u1[j] = -1
    for j in cols_y:
        y1[j] = -1
    for i, j in enumerate(cols_t):
        u1[j] = b[i]
        y1[j] = b[i] + 1
    for i, j in enumerate(cols_z):
        u1[j] = c[i]
        y1[j] = c[i]
    z1 = [0] * n
    for j in cols_t + cols_z:
        z1[j] = -1

    rows = []
    labels = []
    for i in range(p0):
        rows.append(basis(cols_v[i]))
        labels.append(f"v{i + 1}")
    rows.append(tuple(u1))
    labels.append("u1")
    for i, j in enumerate(cols_u):
        rows.append(basis(j))
        labels.append(f"u{i + 2}")
    rows.append(tuple(y1))
    labels.append("y1")
    for i, j in enumerate(cols_y):
        rows.append(basis(j))
        labels.append(f"y{i + 2}")
    for i, j in enumerate(cols_t):
        rows.append(basis(j))
        labels.append(f"t{i + 1}")
    for i, j in enumerate(cols_z):
        rows.append(basis(j))
        labels.append(f"z{i + 2}")
    rows.append(tuple(z1))
    labels.append("z1")
    A = tuple(rows)

    rows_v = tuple(range(p0))
    row_u1 = p0
    rows_u = tuple(range(p0 + 1, p0 + p4))
    row_y1 = p0 + p4
    rows_y = tuple(range(p0 + p4 + 1, p0 + p4 + p1))
    rows_t = tuple(range(num_s + 2, num_s + 2 + p3))
    rows_z = tuple(range(num_s + 2 + p3, n + 2))
    row_z1 = n + 2

    x_classes = [rows_v, (row_y1,) + rows_y, (row_z1,) + rows_z, rows_t, (row_u1,) + rows_u]
    collections = [tuple(sorted(x_classes[a] + x_classes[(a + 1) % 5])) for a in range(5)]

    _verify_pentagon_relations(A, params, x_classes)

    fan = fanmod.build_fan(A, collections, **fan_kwargs)
    return BatyrevStructure(
        params=params, n=n, A=A, fan=fan, labels=tuple(labels),
        rows_v=rows_v, row_u1=row_u1, rows_u=rows_u, row_y1=row_y1, rows_y=rows_y,
        rows_t=rows_t, rows_z=rows_z, row_z1=row_z1,
        s_cols=tuple(range(num_s)), j_cols=tuple(range(num_s, n)))


def _verify_pentagon_relations(A, params, x_classes):
    """Check the five defining ray identities exactly; a failure is a bug."""
    b, c = params.b, params.c
    n = len(A[0])
    zero = tuple(0 for _ in range(n))

    def class_sum(k):
        s = zero
        for r in x_classes[k]:
            s = vec_add(s, A[r])
        return s

    sv, sy, sz, st, su = (class_sum(k) for k in range(5))
    bt = zero
    b1t = zero
    for i, r in enumerate(x_classes[3]):
        bt = vec_add(bt, vec_scale(b[i], A[r]))
        b1t = vec_add(b1t, vec_scale(b[i] + 1, A[r]))
    cz = zero
    for i, r in enumerate(x_classes[2][1:]):  # z2..z_{p2}; z1 leads the class
        cz = vec_add(cz, vec_scale(c[i], A[r]))

    checks = [
        (vec_add(sv, sy), vec_add(cz, b1t)),
        (vec_add(sy, sz), su),
        (vec_add(sz, st), zero),
        (vec_add(st, su), sy),
        (vec_add(su, sv), vec_add(cz, bt)),
    ]
    for k, (lhs, rhs) in enumerate(checks):
        if lhs != rhs:
            raise AssertionError(f"pentagon relation {k + 1} fails: {lhs} != {rhs}")


def heights_from_canonical(st, d, e, f):
    """The normal-form height vector: d at v1, f at u1, e+f at z1, zero elsewhere."""
    ch = CanonicalHeight(d, e, f)
    h = [0] * (st.n + 3)
    h[st.rows_v[0]] = ch.d
    h[st.row_u1] = ch.f
    h[st.row_z1] = ch.e + ch.f
    return tuple(h)


def canonical_height(st, h_raw):
    """Reduce a convex height vector to normal form modulo the columns of A.

    Returns ``(ch, shift)`` where ``heights_from_canonical(st, *ch) ==
    h_raw - A @ shift`` and the normal-form polytope is the raw polytope
    translated by ``shift``.

    The reduction first clears the n basis-ray entries through the identity
    block, then moves the remaining y1 entry onto v1/u1 via the first column
    (v1, u1, y1 are its only nonzero rows).
    """
    h_raw = tuple(int(x) for x in h_raw)
    if len(h_raw) != st.n + 3:
        raise ValueError(f"height vector must have length {st.n + 3}")
    viol = fanmod.find_convexity_violation(st.fan, h_raw)
    if viol is not None:
        raise NotConvex(viol)

    A = st.A
    basis_rows = st.rows_v + st.rows_u + st.rows_y + st.rows_t + st.rows_z
    h = list(h_raw)
    x = [0] * st.n

    for col, row in enumerate(basis_rows):
        delta = -h[row]
        if delta:
            for r in range(len(h)):
                h[r] += A[r][col] * delta
            x[col] += delta

    s = h[st.row_y1]
    if s:
        for r in range(len(h)):
            h[r] += A[r][0] * s
        x[0] += s

    d = h[st.rows_v[0]]
    f = h[st.row_u1]
    e = h[st.row_z1] - f
    support = {st.rows_v[0], st.row_u1, st.row_z1}
    if any(h[r] != 0 for r in range(len(h)) if r not in support):
        raise AssertionError("height normalization left stray entries")  # unreachable
    if min(d, e, f) < 0:
        raise NegativeCanonicalParameter(
            f"normal form gave (d, e, f) = ({d}, {e}, {f}); input was not convex")
    shift = tuple(-xi for xi in x)
    return CanonicalHeight(d, e, f), shift


def heights_from_dict(st, data):
    """Height input: either {'d':, 'e':, 'f':} or {'h': [...]} (raw vector)."""
    if "h" in data:
        h = tuple(int(v) for v in data["h"])
        if len(h) != st.n + 3:
            raise ValueError(f"raw height vector must have length {st.n + 3}")
        return h
    return heights_from_canonical(st, int(data["d"]), int(data["e"]), int(data["f"]))


def batyrev_from_dict(data, **kwargs):
    params = BatyrevParams(tuple(data["p"]), tuple(data.get("b", ())),
                           tuple(data.get("c", ())))
    return build_batyrev(params, **kwargs)


def params_to_dict(params):
    return {"p": list(params.p), "b": list(params.b), "c": list(params.c)}
