"""Pydantic request/response models for the HTTP service.

Rationals are strings throughout ("2/3"), matching the on-disk
arrangement file format; matrices of the pairings are plain ints.
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class HyperplaneModel(BaseModel):
    normal: List[str]
    offset: str


class ArrangementModel(BaseModel):
    ambient_dim: int
    hyperplanes: List[HyperplaneModel]


class ArrangementRequest(BaseModel):
    arrangement: ArrangementModel
    order: str = Field(default="lex", pattern="^(lex|input)$")


class RegionModel(BaseModel):
    index: int  # 1-based, the F_i labels
    signs: List[int]
    vertices: List[List[str]]
    vertex_count: int


class RegionsResponse(BaseModel):
    num_regions: int
    ambient_dim: int
    euler_characteristic: int
    face_counts: Dict[int, int]
    regions: List[RegionModel]


class MatrixResponse(BaseModel):
    num_regions: int
    matrix: List[List[int]]


class PsiChainModel(BaseModel):
    region: int  # 1-based
    # simplices as sorted 1-based hyperplane index lists, coeff in {-1, +1}
    terms: List[Dict[str, object]]


class PsiResponse(BaseModel):
    num_regions: int
    chains: List[PsiChainModel]


class DefinitenessModel(BaseModel):
    verdict: str
    minors: List[str]


class VerifyResponse(BaseModel):
    ambient_dim: int
    num_hyperplanes: int
    num_regions: int
    simple: bool
    coloop_free: bool
    phi: List[List[int]]
    gram: Optional[List[List[int]]]
    identity_holds: bool
    cycles_ok: bool
    psi_independent: bool
    homology_rank_top: int
    rank_matches_r: bool
    definiteness: DefinitenessModel
    theorem_verdict: str
    indefinite_witness: Optional[List[int]]


class ComplexSummaryModel(BaseModel):
    f_vector: List[int]
    # faces as sorted 1-based hyperplane index lists
    faces: List[List[int]]


class NerveResponse(BaseModel):
    independence: ComplexSummaryModel
    nerve: ComplexSummaryModel
    complexes_equal: bool
    divergent_faces: List[List[int]]
    homology_ranks: List[int]


class HomologyResponse(BaseModel):
    f_vector: List[int]
    homology_ranks: List[int]


class GaleRequest(BaseModel):
    matrix: List[List[str]]
    theta: List[str]


class RenderResponse(BaseModel):
    svg: str
