from fractions import Fraction

import pytest

from boundedforms.linalg import (
    DimensionError,
    definiteness,
    det,
    det_sign,
    leading_principal_minors,
    nullspace,
    qm,
    rank,
    rref,
    solve_affine,
)
from conftest import rng_for
from oracles import definiteness_by_inertia


def test_rank_identity():
    assert rank(qm([[1, 0], [0, 1]])) == 2


def test_rank_tri_normals():
    assert rank(qm([[1, 0], [0, 1], [1, 1]])) == 2


def test_rank_zero_matrix():
    assert rank(qm([[0, 0], [0, 0]])) == 0


def test_rank_matches_rref_pivots_random():
    rng = rng_for("rank")
    for _ in range(200):
        n, m = rng.randint(1, 5), rng.randint(1, 5)
        M = qm([[Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(m)] for _ in range(n)])
        _, pivots, _ = rref(M)
        assert rank(M) == len(pivots)


def test_det_sign_identity():
    assert det_sign(qm([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 1


def test_det_sign_negative():
    # columns (0,1) and (1,1)
    assert det_sign(qm([[0, 1], [1, 1]])) == -1


def test_det_sign_repeated_column():
    assert det_sign(qm([[2, 2], [5, 5]])) == 0


def test_det_sign_non_square():
    with pytest.raises(DimensionError):
        det_sign(qm([[1, 0, 0], [0, 1, 0]]))


def test_det_matches_cofactor_expansion_random():
    def cofactor_det(M):
        n = len(M)
        if n == 1:
            return M[0][0]
        return sum(
            (-1) ** j * M[0][j] * cofactor_det([row[:j] + row[j + 1 :] for row in M[1:]])
            for j in range(n)
        )

    rng = rng_for("det")
    for _ in range(100):
        n = rng.randint(1, 4)
        M = qm([[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)])
        assert det(M) == cofactor_det(M)


def test_det_sign_zero_iff_rank_deficient_random():
    rng = rng_for("detrank")
    for _ in range(150):
        n = rng.randint(1, 4)
        M = qm([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        assert (det_sign(M) == 0) == (rank(M) < n)


def test_solve_affine_tri_origin():
    x = solve_affine(qm([[1, 0], [0, 1]]), [Fraction(0), Fraction(0)])
    assert x == (0, 0)


def test_solve_affine_fig1_h3_h4():
    x = solve_affine(qm([[-1, 1], [1, 1]]), [Fraction(0), Fraction(0)])
    assert x == (0, 0)


def test_solve_affine_inconsistent():
    assert solve_affine(qm([[1], [1]]), [Fraction(0), Fraction(1)]) is None


def test_solve_affine_residual_random():
    rng = rng_for("solve")
    for _ in range(150):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        M = qm([[rng.randint(-4, 4) for _ in range(m)] for _ in range(n)])
        rhs = [Fraction(rng.randint(-4, 4)) for _ in range(n)]
        x = solve_affine(M, rhs)
        if x is not None:
            for row, b in zip(M, rhs):
                assert sum(a * v for a, v in zip(row, x)) == b


def test_nullspace_is_kernel():
    M = qm([[1, 1, 1]])
    basis = nullspace(M)
    assert len(basis) == 2
    for v in basis:
        assert sum(v) == 0


def test_definiteness_positive():
    cert = definiteness(qm([[2, -1], [-1, 2]]))
    assert cert.verdict == "positive-definite"
    assert cert.minors == [2, 3]


def test_definiteness_negative():
    cert = definiteness(qm([[-2, 1], [1, -2]]))
    assert cert.verdict == "negative-definite"


def test_definiteness_fig1_phi_indefinite():
    from conftest import FIG1_PHI

    cert = definiteness(qm(FIG1_PHI))
    assert cert.verdict == "indefinite"


def test_definiteness_requires_symmetry():
    with pytest.raises(ValueError):
        definiteness(qm([[1, 2], [3, 4]]))


def test_leading_principal_minors():
    S = qm([[2, -1], [-1, 2]])
    assert leading_principal_minors(S) == [2, 3]


def test_definiteness_agrees_with_inertia_random():
    rng = rng_for("definiteness")
    for _ in range(250):
        n = rng.choice((3, 4))
        S = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                S[i][j] = S[j][i] = rng.randint(-4, 4)
        S = qm(S)
        cert = definiteness(S)
        oracle = definiteness_by_inertia(S)
        if cert.verdict == "degenerate":
            # leading-minor evidence is deliberately not refined further
            assert cert.minors[-1] == 0
        else:
            assert cert.verdict == oracle
