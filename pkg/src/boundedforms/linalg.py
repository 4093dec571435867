"""Exact rational linear algebra on small dense matrices.

Matrices are lists of rows, vectors are tuples; every entry is a
``fractions.Fraction``.  No floating point anywhere: rank, determinant
signs and definiteness certificates are all meant to be taken at face
value, so everything runs in exact arithmetic.  Determinants use
fraction-free (Bareiss) elimination on an integer-scaled copy to keep
intermediate growth polynomial.
"""

from fractions import Fraction
from math import gcd


class DimensionError(ValueError):
    """Matrix dimensions do not match the requested operation."""


def qv(entries):
    """Coerce an iterable to a tuple of Fractions."""
    return tuple(Fraction(e) for e in entries)


def qm(rows):
    """Coerce an iterable of rows to a rational matrix (list of tuples)."""
    mat = [qv(r) for r in rows]
    if len({len(r) for r in mat}) > 1:
        raise DimensionError("ragged matrix")
    return mat


def mat_vec(M, x):
    return tuple(sum(row[j] * x[j] for j in range(len(x))) for row in M)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _integer_rows(M):
    """Scale each row by a positive integer so all entries are integers.

    Returns (rows, scale) with scale = product of the row multipliers;
    row scaling by positive factors preserves rank and divides the
    determinant by `scale`.
    """
    out = []
    scale = 1
    for row in M:
        mult = 1
        for e in row:
            d = Fraction(e).denominator
            mult = mult * d // gcd(mult, d)
        out.append([int(e * mult) for e in row])
        scale *= mult
    return out, scale


def rank(M):
    """Rank over Q, by fraction-free elimination with full pivoting."""
    if not M or not M[0]:
        return 0
    A, _ = _integer_rows(M)
    n, m = len(A), len(A[0])
    r = 0
    prev = 1
    for col_hint in range(m):
        # find any nonzero pivot in the remaining submatrix
        piv = None
        for i in range(r, n):
            for j in range(m):
                if A[i][j] != 0:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        pi, pj = piv
        A[r], A[pi] = A[pi], A[r]
        p = A[r][pj]
        for i in range(r + 1, n):
            f = A[i][pj]
            for j in range(m):
                A[i][j] = (A[i][j] * p - f * A[r][j]) // prev
        prev = p
        r += 1
    return r


def det(M):
    """Exact determinant of a square rational matrix."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise DimensionError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    A, scale = _integer_rows(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return Fraction(sign * A[n - 1][n - 1], scale)


def det_sign(M):
    """Sign of det(M) in {-1, 0, +1}."""
    d = det(M)
    return (d > 0) - (d < 0)


def rref(M, rhs=None):
    """Reduced row echelon form over Q.

    Returns (R, pivots, b) where R is the reduced matrix, pivots the
    list of pivot columns, and b the transformed right-hand side (or
    None).  Input is not modified.
    """
    A = [list(row) for row in qm(M)]
    b = list(qv(rhs)) if rhs is not None else None
    n = len(A)
    m = len(A[0]) if A else 0
    pivots = []
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, n) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        if b is not None:
            b[r], b[piv] = b[piv], b[r]
        p = A[r][c]
        A[r] = [e / p for e in A[r]]
        if b is not None:
            b[r] /= p
        for i in range(n):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [A[i][j] - f * A[r][j] for j in range(m)]
                if b is not None:
                    b[i] -= f * b[r]
        pivots.append(c)
        r += 1
    return A, pivots, b


def solve_affine(M, rhs):
    """One exact solution of M x = rhs, or None if inconsistent.

    Unique when M has full column rank; otherwise free variables are
    set to zero.
    """
    if len(M) != len(rhs):
        raise DimensionError("rhs length does not match row count")
    if not M:
        return ()
    m = len(M[0])
    A, pivots, b = rref(M, rhs)
    for i in range(len(pivots), len(A)):
        if b[i] != 0:
            return None
    x = [Fraction(0)] * m
    for i, c in enumerate(pivots):
        x[c] = b[i]
    return tuple(x)


def nullspace(M, ncols=None):
    """Basis of the kernel of M, as a list of vectors (length = ncols)."""
    if not M:
        if ncols is None:
            raise DimensionError("nullspace of empty matrix needs ncols")
        return [tuple(Fraction(i == j) for j in range(ncols)) for i in range(ncols)]
    m = len(M[0])
    A, pivots, _ = rref(M)
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -A[i][f]
        basis.append(tuple(v))
    return basis


def leading_principal_minors(S):
    """Exact leading principal minors m_1 .. m_n of a square matrix."""
    n = len(S)
    return [det([row[: k + 1] for row in S[: k + 1]]) for k in range(n)]


class DefinitenessCertificate:
    """Exact leading-principal-minor evidence for a definiteness verdict.

    verdict is one of 'positive-definite', 'negative-definite',
    'indefinite', 'degenerate'; minors are the exact values m_1..m_n.
    """

    def __init__(self, verdict, minors):
        self.verdict = verdict
        self.minors = list(minors)

    def __repr__(self):
        return "DefinitenessCertificate(%r, minors=%r)" % (self.verdict, self.minors)

    def __eq__(self, other):
        return (
            isinstance(other, DefinitenessCertificate)
            and self.verdict == other.verdict
            and self.minors == other.minors
        )


def definiteness(S):
    """Classify a symmetric rational matrix by its leading principal minors.

    positive-definite  iff every minor m_k > 0;
    negative-definite  iff (-1)^k m_k > 0 for every k;
    degenerate         iff det = 0 and the nonzero minors violate neither
                       sign pattern;
    indefinite         otherwise.
    """
    n = len(S)
    for i in range(n):
        for j in range(n):
            if S[i][j] != S[j][i]:
                raise ValueError("definiteness requires a symmetric matrix")
    minors = leading_principal_minors(S)
    if all(m > 0 for m in minors):
        return DefinitenessCertificate("positive-definite", minors)
    if all((m > 0 if k % 2 else m < 0) for k, m in enumerate(minors)):
        return DefinitenessCertificate("negative-definite", minors)
    if minors and minors[-1] == 0:
        nz = [(k, m) for k, m in enumerate(minors) if m != 0]
        pos_ok = all(m > 0 for _, m in nz)
        neg_ok = all((m > 0 if k % 2 else m < 0) for k, m in nz)
        if pos_ok or neg_ok:
            return DefinitenessCertificate("degenerate", minors)
    return DefinitenessCertificate("indefinite", minors)
