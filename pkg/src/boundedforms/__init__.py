"""Exact intersection pairings of bounded regions of rational
hyperplane arrangements, with definiteness certificates."""

__version__ = "0.1.0"

from .arrangement import (
    Arrangement,
    BoundedComplex,
    Hyperplane,
    bounded_complex,
    feasible,
    gale_arrangement,
    is_bounded,
    is_coloop_free,
    is_simple,
    vertices,
)
from .complexes import (
    Chain,
    SimplicialComplex,
    boundary_matrix,
    independence_complex,
    is_cycle,
    nerve_complex,
    reduced_homology_ranks,
)
from .linalg import definiteness, det_sign, rank, solve_affine
from .pairing import (
    VerificationReport,
    gram_matrix,
    phi,
    phi_matrix,
    psi,
    verify,
)
