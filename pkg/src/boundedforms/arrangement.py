"""Rational affine hyperplane arrangements and their bounded complexes.

An arrangement is a list of hyperplanes ``<b_i, x> + psi_i = 0`` in Q^m.
Faces are encoded by sign vectors in {-1, 0, +1}^s; realizability is
decided by exact Fourier-Motzkin elimination (strict inequalities are
handled natively, no perturbation).  The bounded complex is enumerated
by sweeping sign vectors depth-first with infeasible prefixes pruned;
the output is identical to the full 3^s sweep.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd

from .linalg import (
    DimensionError,
    det_sign,
    nullspace,
    qv,
    rank,
    solve_affine,
)


class InputError(ValueError):
    """Invalid arrangement data (zero normal, bad dimensions, ...)."""


class InfeasibleSignVector(ValueError):
    """A sign vector that names no face was passed where a face is required."""


@dataclass(frozen=True)
class Hyperplane:
    """Affine hyperplane {x : <normal, x> + offset = 0}."""

    normal: tuple
    offset: Fraction

    def value(self, point):
        return sum(a * x for a, x in zip(self.normal, point)) + self.offset

    def side(self, point):
        v = self.value(point)
        return (v > 0) - (v < 0)


class Arrangement:
    """Ordered list of s hyperplanes in ambient dimension m.

    The hyperplane order is part of the arrangement's identity: region
    ordering and all orientation signs refer to it.
    """

    def __init__(self, ambient_dim, hyperplanes):
        if ambient_dim < 1:
            raise InputError("ambient dimension must be >= 1")
        if not hyperplanes:
            raise InputError("arrangement needs at least one hyperplane")
        hs = []
        for k, h in enumerate(hyperplanes):
            normal = qv(h.normal) if isinstance(h, Hyperplane) else qv(h[0])
            offset = Fraction(h.offset if isinstance(h, Hyperplane) else h[1])
            if len(normal) != ambient_dim:
                raise InputError("normal length mismatch at index %d" % k)
            if all(a == 0 for a in normal):
                raise InputError("zero normal at index %d" % k)
            hs.append(Hyperplane(normal, offset))
        self.ambient_dim = ambient_dim
        self.hyperplanes = tuple(hs)

    @property
    def size(self):
        return len(self.hyperplanes)

    def normal_matrix(self):
        """Rows are the hyperplane normals (the matrix B)."""
        return [list(h.normal) for h in self.hyperplanes]

    def _integer_data(self):
        """(normal, offset) per hyperplane scaled to coprime integers.

        Positive scaling preserves sides and zero sets; integer data
        keeps the feasibility inner loops out of Fraction arithmetic.
        """
        if not hasattr(self, "_int_data"):
            scaled = []
            for h in self.hyperplanes:
                coeffs, const = _normalize_ineq(h.normal, h.offset)
                scaled.append((coeffs, const))
            self._int_data = scaled
        return self._int_data

    def sign_vector_at(self, point):
        return tuple(h.side(point) for h in self.hyperplanes)

    def __eq__(self, other):
        return (
            isinstance(other, Arrangement)
            and self.ambient_dim == other.ambient_dim
            and self.hyperplanes == other.hyperplanes
        )


@dataclass(frozen=True)
class Vertex:
    point: tuple
    incident: tuple  # sorted hyperplane indices containing the point


def _conforms(vertex_signs, face_signs):
    return all(a == 0 or a == b for a, b in zip(vertex_signs, face_signs))


@dataclass
class Face:
    """A bounded face of the arrangement, keyed by its sign vector."""

    signs: tuple
    dim: int
    sample: tuple
    vertices: list

    @property
    def zero_set(self):
        return tuple(i for i, s in enumerate(self.signs) if s == 0)


class BoundedComplex:
    """All bounded faces of an arrangement, grouped by dimension.

    `regions` are the dimension-m faces in a fixed deterministic order
    (lexicographic on sign vectors by default); `gamma_faces` is the
    subcomplex of faces of dimension <= m-1.
    """

    def __init__(self, arrangement, faces, order="lex"):
        self.arrangement = arrangement
        m = arrangement.ambient_dim
        self.faces_by_dim = {d: [] for d in range(m + 1)}
        for f in faces:
            self.faces_by_dim[f.dim].append(f)
        for d in self.faces_by_dim:
            self.faces_by_dim[d].sort(key=lambda f: f.signs)
        if order == "lex":
            key = lambda f: f.signs
        elif order == "input":
            # positive side of earlier hyperplanes first
            key = lambda f: tuple(0 if s > 0 else 1 for s in f.signs)
        else:
            raise InputError("unknown region order %r" % (order,))
        self.regions = sorted(self.faces_by_dim[m], key=key)

    @property
    def num_regions(self):
        return len(self.regions)

    def face_counts(self):
        return {d: len(fs) for d, fs in self.faces_by_dim.items() if fs}

    def euler_characteristic(self):
        return sum((-1) ** d * len(fs) for d, fs in self.faces_by_dim.items())

    def gamma_faces(self):
        m = self.arrangement.ambient_dim
        return [f for d in range(m) for f in self.faces_by_dim[d]]

    def closure_intersection(self, i, j):
        """(dim, vertices) of cl(F_i) n cl(F_j), or None if empty.

        Both closures are bounded polytopes, so the intersection is the
        convex hull of the arrangement vertices conforming to both sign
        vectors; its dimension is the rank of the vertex differences.
        """
        fi, fj = self.regions[i], self.regions[j]
        verts = [
            v
            for v in _arrangement_vertices(self.arrangement)
            if _conforms(self.arrangement.sign_vector_at(v.point), fi.signs)
            and _conforms(self.arrangement.sign_vector_at(v.point), fj.signs)
        ]
        if not verts:
            return None
        v0 = verts[0].point
        diffs = [[x - y for x, y in zip(v.point, v0)] for v in verts[1:]]
        d = rank(diffs) if diffs else 0
        return d, verts


# ---------------------------------------------------------------------------
# Fourier-Motzkin feasibility with exact witnesses


def _normalize_ineq(coeffs, const):
    """Scale to coprime integers; positive scaling leaves the inequality
    unchanged, and integer coefficients keep Fourier-Motzkin fast."""
    nums = list(coeffs) + [const]
    if all(isinstance(c, int) for c in nums):
        ints = nums
    else:
        nums = [Fraction(c) for c in nums]
        lcm = 1
        for c in nums:
            d = c.denominator
            lcm = lcm * d // gcd(lcm, d)
        ints = [int(c * lcm) for c in nums]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    if g > 1:
        ints = [c // g for c in ints]
    return tuple(ints[:-1]), ints[-1]


def fm_feasible(ineqs, nvars):
    """Witness for a system of linear inequalities, or None.

    Each inequality is (coeffs, const, strict) meaning
    sum(coeffs*t) + const > 0 (strict) or >= 0.  Returns a tuple of
    Fractions of length nvars, or None if the system is infeasible.
    """
    if nvars == 0:
        for coeffs, const, strict in ineqs:
            if const < 0 or (strict and const == 0):
                return None
        return ()
    j = nvars - 1
    lowers, uppers, rest = [], [], []
    for coeffs, const, strict in ineqs:
        a = coeffs[j]
        if a > 0:
            lowers.append((coeffs, const, strict))
        elif a < 0:
            uppers.append((coeffs, const, strict))
        else:
            rest.append((coeffs[:j], const, strict))
    projected = list(rest)
    for lc, lk, ls in lowers:
        for uc, uk, us in uppers:
            a, b = lc[j], -uc[j]
            coeffs = tuple(b * lc[i] + a * uc[i] for i in range(j))
            const = b * lk + a * uk
            coeffs, const = _normalize_ineq(coeffs, const)
            projected.append((coeffs, const, ls or us))
    w = fm_feasible(projected, j)
    if w is None:
        return None
    lo = hi = None
    lo_strict = hi_strict = False
    for coeffs, const, strict in lowers:
        val = -Fraction(sum(coeffs[i] * w[i] for i in range(j)) + const, 1) / coeffs[j]
        if lo is None or val > lo:
            lo, lo_strict = val, strict
        elif val == lo:
            lo_strict = lo_strict or strict
    for coeffs, const, strict in uppers:
        val = -Fraction(sum(coeffs[i] * w[i] for i in range(j)) + const, 1) / coeffs[j]
        if hi is None or val < hi:
            hi, hi_strict = val, strict
        elif val == hi:
            hi_strict = hi_strict or strict
    if lo is not None and hi is not None:
        assert lo < hi or (lo == hi and not (lo_strict or hi_strict))
        t = (lo + hi) / 2
    elif lo is not None:
        t = lo + 1 if lo_strict else lo
    elif hi is not None:
        t = hi - 1 if hi_strict else hi
    else:
        t = Fraction(0)
    return w + (t,)


class _EqCache:
    """Per-arrangement cache of equality-subsystem solutions.

    Maps a zero set to (x0, basis) where x0 solves all equalities and
    basis spans the homogeneous solutions, or to None if inconsistent.
    """

    def __init__(self, arrangement):
        self.arr = arrangement
        self.cache = {}

    def get(self, zero_set):
        key = frozenset(zero_set)
        if key not in self.cache:
            m = self.arr.ambient_dim
            if not key:
                x0 = tuple(Fraction(0) for _ in range(m))
                basis = [tuple(int(i == j) for j in range(m)) for i in range(m)]
                self.cache[key] = (x0, basis)
            else:
                rows = [list(self.arr.hyperplanes[i].normal) for i in sorted(key)]
                rhs = [-self.arr.hyperplanes[i].offset for i in sorted(key)]
                x0 = solve_affine(rows, rhs)
                if x0 is None:
                    self.cache[key] = None
                else:
                    basis = [_primitive(v) for v in nullspace(rows)]
                    self.cache[key] = (x0, basis)
        return self.cache[key]


def _strict_system(arr, signs, x0, basis, indices=None):
    """Inequalities in the free parameters t for the nonzero entries of signs.

    Returns the list of (coeffs, const, strict) or None if some
    inequality is constant-infeasible.
    """
    ineqs = []
    data = arr._integer_data()
    idx = indices if indices is not None else range(len(signs))
    for i in idx:
        s = signs[i]
        if s == 0:
            continue
        normal, offset = data[i]
        coeffs = tuple(s * dot_(normal, b) for b in basis)
        const = s * (dot_(normal, x0) + offset)
        if all(c == 0 for c in coeffs):
            if const <= 0:
                return None
            continue
        ineqs.append(_normalize_ineq(coeffs, const) + (True,))
    return ineqs


def dot_(u, v):
    return sum(a * b for a, b in zip(u, v))


def feasible(arr, signs, _cache=None):
    """Exact witness point realizing the sign vector, or None.

    Zero entries are equalities, +/- entries strict inequalities; the
    witness satisfies every relation exactly.
    """
    if len(signs) != arr.size:
        raise InputError("sign vector length mismatch")
    cache = _cache or _EqCache(arr)
    zero_set = [i for i, s in enumerate(signs) if s == 0]
    eq = cache.get(zero_set)
    if eq is None:
        return None
    x0, basis = eq
    ineqs = _strict_system(arr, signs, x0, basis)
    if ineqs is None:
        return None
    t = fm_feasible(ineqs, len(basis))
    if t is None:
        return None
    point = tuple(
        x0[c] + sum(basis[b][c] * t[b] for b in range(len(basis)))
        for c in range(arr.ambient_dim)
    )
    assert arr.sign_vector_at(point) == tuple(signs)
    return point


def _recession_trivial(arr, signs):
    """True iff the recession cone of the closed face `signs` is {0}."""
    zero_rows = [list(arr.hyperplanes[i].normal) for i, s in enumerate(signs) if s == 0]
    basis = nullspace(zero_rows, ncols=arr.ambient_dim)
    k = len(basis)
    if k == 0:
        return True
    basis = [_primitive(v) for v in basis]
    data = arr._integer_data()
    rows = []
    for i, s in enumerate(signs):
        if s == 0:
            continue
        coeffs, _ = _normalize_ineq(
            tuple(s * dot_(data[i][0], b) for b in basis), 0
        )
        rows.append(coeffs)
    if k == 1:
        # one free direction: nonzero ray exists iff no coefficient clash
        vals = [c[0] for c in rows]
        return any(v > 0 for v in vals) and any(v < 0 for v in vals)
    for j in range(k):
        for sigma in (1, -1):
            # substitute t_j = sigma, solve the weak system in the rest
            ineqs = []
            ok = True
            for coeffs in rows:
                red = coeffs[:j] + coeffs[j + 1 :]
                const = coeffs[j] * sigma
                if all(c == 0 for c in red):
                    if const < 0:
                        ok = False
                        break
                    continue
                ineqs.append((red, const, False))
            if ok and fm_feasible(ineqs, k - 1) is not None:
                return False
    return True


def is_bounded(arr, signs, _cache=None):
    """True iff the closed polyhedron named by `signs` is bounded.

    Tested exactly on the recession cone: the homogeneous system (zero
    entries as equalities, +/- as weak inequalities) must admit only the
    zero direction.
    """
    if feasible(arr, signs, _cache=_cache) is None:
        raise InfeasibleSignVector("sign vector %r is not realizable" % (signs,))
    return _recession_trivial(arr, signs)


# ---------------------------------------------------------------------------
# Vertices and the bounded complex


def _arrangement_vertices(arr):
    if not hasattr(arr, "_vertices"):
        m = arr.ambient_dim
        found = {}
        for subset in combinations(range(arr.size), m):
            rows = [list(arr.hyperplanes[i].normal) for i in subset]
            if rank(rows) < m:
                continue
            rhs = [-arr.hyperplanes[i].offset for i in subset]
            x = solve_affine(rows, rhs)
            if x is None:
                continue
            if x not in found:
                incident = tuple(
                    i for i, h in enumerate(arr.hyperplanes) if h.value(x) == 0
                )
                found[x] = Vertex(point=x, incident=incident)
        arr._vertices = sorted(found.values(), key=lambda v: v.point)
    return arr._vertices


def vertices(arr):
    """All arrangement vertices, each with its full incident index set."""
    return list(_arrangement_vertices(arr))


def bounded_complex(arr, order="lex"):
    """Enumerate every bounded face of the arrangement.

    Sweeps sign vectors depth-first over hyperplane indices, pruning
    prefixes that are already infeasible; equivalent to (but faster
    than) screening all 3^s candidates independently.
    """
    cache = _EqCache(arr)
    m = arr.ambient_dim
    s = arr.size
    verts = _arrangement_vertices(arr)
    vert_signs = [arr.sign_vector_at(v.point) for v in verts]
    faces = []

    def prefix_feasible(prefix):
        zero_set = [i for i, v in enumerate(prefix) if v == 0]
        eq = cache.get(zero_set)
        if eq is None:
            return False
        x0, basis = eq
        ineqs = _strict_system(arr, prefix, x0, basis, indices=range(len(prefix)))
        if ineqs is None:
            return False
        return fm_feasible(ineqs, len(basis)) is not None

    def sweep(prefix):
        if len(prefix) == s:
            signs = tuple(prefix)
            point = feasible(arr, signs, _cache=cache)
            if point is None:
                return
            fverts = [
                v for v, vs in zip(verts, vert_signs) if _conforms(vs, signs)
            ]
            zero_rows = [
                list(arr.hyperplanes[i].normal) for i, v in enumerate(signs) if v == 0
            ]
            dim = m - (rank(zero_rows) if zero_rows else 0)
            # bounded faces are polytopes, hence have a vertex
            if not fverts:
                return
            if dim > 0 and not _recession_trivial(arr, signs):
                return
            faces.append(Face(signs=signs, dim=dim, sample=point, vertices=fverts))
            return
        for value in (0, 1, -1):
            prefix.append(value)
            if prefix_feasible(prefix):
                sweep(prefix)
            prefix.pop()

    sweep([])
    return BoundedComplex(arr, faces, order=order)


def is_simple(arr):
    """True iff every vertex lies on exactly m hyperplanes."""
    return all(len(v.incident) == arr.ambient_dim for v in _arrangement_vertices(arr))


def is_coloop_free(arr):
    """True iff deleting any one normal leaves the matroid rank unchanged."""
    B = arr.normal_matrix()
    full = rank(B)
    for i in range(arr.size):
        if rank(B[:i] + B[i + 1 :]) < full:
            return False
    return True


def _primitive(vec):
    """Clear denominators and divide by content; first nonzero entry > 0."""
    lcm = 1
    for e in vec:
        d = Fraction(e).denominator
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(e * lcm) for e in vec]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    if g:
        ints = [c // g for c in ints]
    lead = next((c for c in ints if c != 0), 0)
    if lead < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def gale_arrangement(A, theta):
    """Arrangement in Q^(n-d) derived from a d x n matrix and degree theta.

    B's columns are a deterministic primitive basis of ker(A); psi is
    one exact solution of A psi = theta.  Different psi choices give
    translates of each other, which leaves every pairing invariant.
    """
    A = [qv(row) for row in A]
    theta = qv(theta)
    d = len(A)
    if d == 0 or len(theta) != d:
        raise InputError("degree length must match the row count")
    n = len(A[0])
    if rank([list(r) for r in A]) < d:
        raise InputError("matrix must have full row rank")
    if n - d < 1:
        raise InputError("kernel is trivial: no arrangement (need n > d)")
    kernel = [_primitive(v) for v in nullspace([list(r) for r in A])]
    psi = solve_affine([list(r) for r in A], theta)
    if psi is None:
        raise InputError("inconsistent degree")
    hyperplanes = [
        (tuple(col[i] for col in kernel), psi[i]) for i in range(n)
    ]
    return Arrangement(n - d, hyperplanes)
