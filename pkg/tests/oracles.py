"""Independent brute-force oracles used only by the tests.

These deliberately avoid the library's main code paths: definiteness
via congruence diagonalization (inertia), intersections via direct
point-membership arithmetic.
"""

from fractions import Fraction


def inertia(S):
    """(positive, negative, zero) eigenvalue counts, by congruence.

    Symmetric Gaussian elimination over Q; Sylvester's law makes the
    diagonal sign counts an exact invariant.
    """
    n = len(S)
    A = [[Fraction(S[i][j]) for j in range(n)] for i in range(n)]
    for k in range(n):
        if A[k][k] == 0:
            j = next((j for j in range(k + 1, n) if A[j][j] != 0), None)
            if j is not None:
                # swap rows/cols k <-> j
                A[k], A[j] = A[j], A[k]
                for row in A:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if A[k][j] != 0), None)
                if j is None:
                    continue  # row/col k already zeroed out
                # e_k += e_j puts 2*A[k][j] on the diagonal
                for c in range(n):
                    A[k][c] += A[j][c]
                for r in range(n):
                    A[r][k] += A[r][j]
        p = A[k][k]
        for i in range(k + 1, n):
            if A[i][k] == 0:
                continue
            f = A[i][k] / p
            for c in range(n):
                A[i][c] -= f * A[k][c]
            for r in range(n):
                A[r][i] -= f * A[r][k]
    diag = [A[i][i] for i in range(n)]
    return (
        sum(1 for d in diag if d > 0),
        sum(1 for d in diag if d < 0),
        sum(1 for d in diag if d == 0),
    )


def definiteness_by_inertia(S):
    pos, neg, zero = inertia(S)
    n = len(S)
    if pos == n:
        return "positive-definite"
    if neg == n:
        return "negative-definite"
    if pos and neg:
        return "indefinite"
    return "degenerate"


def membership_sign(hyperplane, point):
    v = sum(a * x for a, x in zip(hyperplane.normal, point)) + hyperplane.offset
    return (v > 0) - (v < 0)


def phi_entry_oracle(arr, region_i, region_j, all_vertices):
    """Phi(F_i, F_j) recomputed from raw hyperplane values at vertices."""
    shared = []
    for v in all_vertices:
        ok = True
        for region in (region_i, region_j):
            for k, h in enumerate(arr.hyperplanes):
                sgn = membership_sign(h, v.point)
                if sgn != 0 and sgn != region.signs[k]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            shared.append(v.point)
    if not shared:
        return 0
    # affine hull dimension by rational row reduction of the differences
    base = shared[0]
    rows = [[x - y for x, y in zip(p, base)] for p in shared[1:]]
    dim = _row_rank(rows)
    return (-1) ** dim * len(shared)


def _row_rank(rows):
    rows = [list(map(Fraction, r)) for r in rows if any(r)]
    rank = 0
    cols = len(rows[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        rank += 1
    return rank
