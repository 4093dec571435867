"""Matroid independence complex, nerve complex, and rational homology.

Simplices are strictly increasing tuples of hyperplane indices
(0-based).  Homology is reduced and taken over Q: the boundary in
degree 0 is augmented to the empty simplex, so rank statements hold
uniformly down to ambient dimension 1.
"""

from fractions import Fraction

from .linalg import rank, solve_affine


class SimplicialComplex:
    """Abstract simplicial complex, faces grouped and sorted by dimension."""

    def __init__(self, faces):
        by_dim = {}
        for f in faces:
            f = tuple(f)
            assert list(f) == sorted(set(f)), "simplex must be strictly sorted"
            by_dim.setdefault(len(f) - 1, set()).add(f)
        self.faces_by_dim = {
            d: sorted(by_dim[d]) for d in sorted(by_dim)
        }
        self._index = {
            d: {f: i for i, f in enumerate(fs)} for d, fs in self.faces_by_dim.items()
        }

    @property
    def top_dim(self):
        return max(self.faces_by_dim) if self.faces_by_dim else -1

    @property
    def vertex_labels(self):
        return [f[0] for f in self.faces_by_dim.get(0, [])]

    def faces(self, d):
        return self.faces_by_dim.get(d, [])

    def f_vector(self):
        return tuple(len(self.faces(d)) for d in range(self.top_dim + 1))

    def has_face(self, simplex):
        d = len(simplex) - 1
        return tuple(simplex) in self._index.get(d, {})

    def all_faces(self):
        return [f for d in sorted(self.faces_by_dim) for f in self.faces_by_dim[d]]

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.faces_by_dim == other.faces_by_dim
        )


def _grow(seeds, extend_ok, max_size):
    """Level-by-level enumeration of a hereditary family of index sets."""
    faces = []
    level = [f for f in seeds]
    while level:
        faces.extend(level)
        nxt = []
        if max_size is not None and len(level[0]) >= max_size:
            break
        for f in level:
            for j in range(f[-1] + 1, extend_ok.n):
                cand = f + (j,)
                if extend_ok(cand):
                    nxt.append(cand)
        level = nxt
    return faces


def independent(arr, subset):
    """True iff the normals indexed by `subset` are linearly independent."""
    rows = [list(arr.hyperplanes[i].normal) for i in subset]
    return rank(rows) == len(subset)


def independence_complex(arr):
    """Faces are the independent subsets of the column matroid of B."""

    def ok(cand):
        return independent(arr, cand)

    ok.n = arr.size
    seeds = [(i,) for i in range(arr.size)]  # normals are nonzero by invariant
    return SimplicialComplex(_grow(seeds, ok, arr.ambient_dim))


def nerve_complex(arr):
    """Faces are the subsets whose hyperplanes share a common point."""

    def ok(cand):
        rows = [list(arr.hyperplanes[i].normal) for i in cand]
        rhs = [-arr.hyperplanes[i].offset for i in cand]
        return solve_affine(rows, rhs) is not None

    ok.n = arr.size
    seeds = [(i,) for i in range(arr.size)]
    return SimplicialComplex(_grow(seeds, ok, None))


class Chain:
    """Formal rational combination of simplices of one degree."""

    def __init__(self, degree, coefficients=None):
        self.degree = degree
        self.coefficients = {
            s: Fraction(c) for s, c in (coefficients or {}).items() if c != 0
        }
        for s in self.coefficients:
            assert len(s) - 1 == degree

    def is_zero(self):
        return not self.coefficients

    def __eq__(self, other):
        return (
            isinstance(other, Chain)
            and self.degree == other.degree
            and self.coefficients == other.coefficients
        )

    def __repr__(self):
        return "Chain(%d, %r)" % (self.degree, self.coefficients)


def chain_boundary(chain):
    """Augmented boundary: in degree 0 the target is the empty simplex."""
    out = {}
    for simplex, coeff in chain.coefficients.items():
        if chain.degree == 0:
            out[()] = out.get((), Fraction(0)) + coeff
        else:
            for j in range(len(simplex)):
                face = simplex[:j] + simplex[j + 1 :]
                out[face] = out.get(face, Fraction(0)) + (-1) ** j * coeff
    out = {s: c for s, c in out.items() if c != 0}
    boundary = Chain.__new__(Chain)
    boundary.degree = chain.degree - 1
    boundary.coefficients = out
    return boundary


def is_cycle(complex_, chain):
    """True iff the augmented boundary of the chain vanishes."""
    for s in chain.coefficients:
        if not complex_.has_face(s):
            raise ValueError("chain simplex %r is not a face of the complex" % (s,))
    return chain_boundary(chain).is_zero()


def boundary_matrix(complex_, k):
    """Matrix of the boundary map from k-chains to (k-1)-chains.

    Column per k-simplex, row per (k-1)-simplex; for k = 0 the single
    row is the augmentation to the empty simplex.
    """
    if k < 0 or k > complex_.top_dim:
        raise ValueError("degree %d out of range" % k)
    cols = complex_.faces(k)
    if k == 0:
        return [[Fraction(1) for _ in cols]]
    rows = complex_.faces(k - 1)
    row_index = {f: i for i, f in enumerate(rows)}
    M = [[Fraction(0)] * len(cols) for _ in rows]
    for c, simplex in enumerate(cols):
        for j in range(len(simplex)):
            face = simplex[:j] + simplex[j + 1 :]
            M[row_index[face]][c] = Fraction((-1) ** j)
    return M


def reduced_homology_ranks(complex_):
    """Ranks of reduced rational homology in degrees 0 .. top_dim."""
    top = complex_.top_dim
    if top < 0:
        return []
    ranks = []
    bd_rank = {}
    for k in range(top + 1):
        bd_rank[k] = rank(boundary_matrix(complex_, k))
    bd_rank[top + 1] = 0
    for k in range(top + 1):
        nullity = len(complex_.faces(k)) - bd_rank[k]
        ranks.append(nullity - bd_rank[k + 1])
    return ranks


def reduced_euler_characteristic(complex_):
    """Alternating face count, including the empty simplex."""
    return -1 + sum(
        (-1) ** d * len(fs) for d, fs in complex_.faces_by_dim.items()
    )
