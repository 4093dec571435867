from fractions import Fraction

import pytest

from boundedforms.complexes import (
    Chain,
    SimplicialComplex,
    boundary_matrix,
    chain_boundary,
    independence_complex,
    independent,
    is_cycle,
    nerve_complex,
    reduced_euler_characteristic,
    reduced_homology_ranks,
)
from boundedforms.linalg import rank
from conftest import random_arrangement, rng_for


def test_independent_tri(tri):
    assert independent(tri, (0, 1, 2)) is False
    assert independent(tri, (0, 2)) is True
    assert independent(tri, (1,)) is True


def test_independence_complex_tri(tri):
    K = independence_complex(tri)
    assert K.faces(0) == [(0,), (1,), (2,)]
    assert K.faces(1) == [(0, 1), (0, 2), (1, 2)]
    assert K.top_dim == 1


def test_independence_complex_pts3(pts3):
    K = independence_complex(pts3)
    assert K.f_vector() == (3,)


def test_independence_complex_fig1(fig1):
    K = independence_complex(fig1)
    assert K.f_vector() == (5, 9)
    assert not K.has_face((0, 1))  # parallel normals are dependent


def test_nerve_equals_independence_tri(tri):
    assert nerve_complex(tri) == independence_complex(tri)


def test_nerve_fig1_diverges(fig1):
    N = nerve_complex(fig1)
    K = independence_complex(fig1)
    assert N != K
    extra = set(N.all_faces()) - set(K.all_faces())
    assert extra == {(2, 3, 4)}


def test_nerve_parallel_pair():
    from boundedforms.arrangement import Arrangement

    arr = Arrangement(2, [((0, 1), 0), ((0, 1), -1)])
    N = nerve_complex(arr)
    assert not N.has_face((0, 1))


def test_downward_closure_random():
    rng = rng_for("hereditary")
    for _ in range(15):
        arr = random_arrangement(rng, 2, 5)
        K = independence_complex(arr)
        for f in K.all_faces():
            for j in range(len(f)):
                sub = f[:j] + f[j + 1 :]
                if sub:
                    assert K.has_face(sub)


def test_edge_boundary():
    K = SimplicialComplex([(0,), (1,), (0, 1)])
    M = boundary_matrix(K, 1)
    assert M == [[Fraction(-1)], [Fraction(1)]]


def test_boundary_squares_to_zero(tri):
    K = independence_complex(tri)
    d1 = boundary_matrix(K, 1)
    d0 = boundary_matrix(K, 0)
    prod = [
        [sum(d0[i][k] * d1[k][j] for k in range(len(d1))) for j in range(len(d1[0]))]
        for i in range(len(d0))
    ]
    assert all(e == 0 for row in prod for e in row)


def test_augmented_boundary_pts3(pts3):
    K = independence_complex(pts3)
    assert boundary_matrix(K, 0) == [[1, 1, 1]]


def test_boundary_degree_out_of_range(tri):
    with pytest.raises(ValueError):
        boundary_matrix(independence_complex(tri), 5)


def test_homology_tri(tri):
    assert reduced_homology_ranks(independence_complex(tri)) == [0, 1]


def test_homology_pts3(pts3):
    assert reduced_homology_ranks(independence_complex(pts3)) == [2]


def test_homology_full_simplex():
    K = SimplicialComplex(
        [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)]
    )
    assert reduced_homology_ranks(K) == [0, 0, 0]


def test_reduced_euler_matches_homology(tri, pts3):
    for arr in (tri, pts3):
        K = independence_complex(arr)
        ranks = reduced_homology_ranks(K)
        chi = sum((-1) ** k * r for k, r in enumerate(ranks))
        assert reduced_euler_characteristic(K) == chi


def test_chain_boundary_and_cycles(tri):
    K = independence_complex(tri)
    c = Chain(1, {(0, 1): 1, (0, 2): -1, (1, 2): 1})
    assert is_cycle(K, c)
    single = Chain(1, {(0, 1): 1})
    assert not is_cycle(K, single)
    assert is_cycle(K, Chain(1, {}))


def test_is_cycle_rejects_foreign_simplex(tri):
    K = independence_complex(tri)
    with pytest.raises(ValueError):
        is_cycle(K, Chain(1, {(0, 3): 1}))


def test_boundary_of_boundary_chain_random():
    rng = rng_for("ddzero")
    for _ in range(10):
        arr = random_arrangement(rng, 3, 5)
        K = independence_complex(arr)
        if K.top_dim < 1:
            continue
        faces = K.faces(K.top_dim)
        c = Chain(K.top_dim, {f: rng.randint(-3, 3) for f in faces})
        assert chain_boundary(chain_boundary(c)).is_zero()
