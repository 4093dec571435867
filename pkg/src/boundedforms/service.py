"""FastAPI service exposing the arrangement toolkit.

All endpoints are POST with the arrangement inline; computations are
pure, so the service is stateless and safe for concurrent clients.
Error contract: 400 for invalid input data, 409 for structurally valid
input a computation cannot accept (no bounded regions, render in the
wrong dimension), 422 for schema violations (pydantic).
"""

from fastapi import FastAPI, HTTPException

from . import __version__
from .arrangement import InputError, bounded_complex, gale_arrangement, vertices
from .complexes import (
    independence_complex,
    nerve_complex,
    reduced_homology_ranks,
)
from .pairing import NonSimpleArrangement, gram_matrix, phi_matrix, psi_chains, verify
from .render import render_svg
from .schemas import (
    ArrangementModel,
    ArrangementRequest,
    ComplexSummaryModel,
    GaleRequest,
    HomologyResponse,
    MatrixResponse,
    NerveResponse,
    PsiChainModel,
    PsiResponse,
    RegionModel,
    RegionsResponse,
    RenderResponse,
    VerifyResponse,
)
from .serialize import (
    arrangement_from_dict,
    arrangement_to_dict,
    format_rational,
    parse_rational,
    report_to_dict,
)

app = FastAPI(
    title="boundedforms",
    description="Exact intersection pairings of bounded regions of "
    "rational hyperplane arrangements.",
    version=__version__,
)


def _arrangement(model: ArrangementModel):
    try:
        return arrangement_from_dict(model.model_dump())
    except InputError as exc:
        raise HTTPException(status_code=400, detail=str(exc))


def _complex_or_409(arr, order):
    bc = bounded_complex(arr, order=order)
    if bc.num_regions < 1:
        raise HTTPException(status_code=409, detail="no bounded regions")
    return bc


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}


@app.post("/regions", response_model=RegionsResponse)
def regions(req: ArrangementRequest):
    arr = _arrangement(req.arrangement)
    bc = bounded_complex(arr, order=req.order)
    return RegionsResponse(
        num_regions=bc.num_regions,
        ambient_dim=arr.ambient_dim,
        euler_characteristic=bc.euler_characteristic(),
        face_counts=bc.face_counts(),
        regions=[
            RegionModel(
                index=k + 1,
                signs=list(region.signs),
                vertices=[
                    [format_rational(c) for c in v.point] for v in region.vertices
                ],
                vertex_count=len(region.vertices),
            )
            for k, region in enumerate(bc.regions)
        ],
    )


@app.post("/phi", response_model=MatrixResponse)
def phi_endpoint(req: ArrangementRequest):
    arr = _arrangement(req.arrangement)
    bc = _complex_or_409(arr, req.order)
    return MatrixResponse(num_regions=bc.num_regions, matrix=phi_matrix(bc))


@app.post("/gram", response_model=MatrixResponse)
def gram_endpoint(req: ArrangementRequest):
    arr = _arrangement(req.arrangement)
    bc = _complex_or_409(arr, req.order)
    try:
        return MatrixResponse(num_regions=bc.num_regions, matrix=gram_matrix(bc))
    except NonSimpleArrangement as exc:
        raise HTTPException(status_code=409, detail=str(exc))


@app.post("/psi", response_model=PsiResponse)
def psi_endpoint(req: ArrangementRequest):
    arr = _arrangement(req.arrangement)
    bc = _complex_or_409(arr, req.order)
    try:
        chains = psi_chains(bc)
    except NonSimpleArrangement as exc:
        raise HTTPException(status_code=409, detail=str(exc))
    return PsiResponse(
        num_regions=bc.num_regions,
        chains=[
            PsiChainModel(
                region=k + 1,
                terms=[
                    {"simplex": [i + 1 for i in s], "coefficient": int(c)}
                    for s, c in sorted(chain.coefficients.items())
                ],
            )
            for k, chain in enumerate(chains)
        ],
    )


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: ArrangementRequest):
    arr = _arrangement(req.arrangement)
    try:
        report = verify(arr, order=req.order)
    except ValueError as exc:
        raise HTTPException(status_code=409, detail=str(exc))
    data = report_to_dict(report)
    witness = report.indefinite_witness
    data["indefinite_witness"] = list(witness) if witness else None
    return VerifyResponse(**data)


def _summary(K):
    return ComplexSummaryModel(
        f_vector=list(K.f_vector()),
        faces=[[i + 1 for i in f] for f in K.all_faces()],
    )


@app.post("/nerve", response_model=NerveResponse)
def nerve_endpoint(req: ArrangementRequest):
    arr = _arrangement(req.arrangement)
    ind = independence_complex(arr)
    nrv = nerve_complex(arr)
    ind_faces = set(ind.all_faces())
    nrv_faces = set(nrv.all_faces())
    divergent = sorted(ind_faces.symmetric_difference(nrv_faces), key=lambda f: (len(f), f))
    return NerveResponse(
        independence=_summary(ind),
        nerve=_summary(nrv),
        complexes_equal=ind == nrv,
        divergent_faces=[[i + 1 for i in f] for f in divergent],
        homology_ranks=reduced_homology_ranks(ind),
    )


@app.post("/homology", response_model=HomologyResponse)
def homology_endpoint(req: ArrangementRequest):
    arr = _arrangement(req.arrangement)
    K = independence_complex(arr)
    return HomologyResponse(
        f_vector=list(K.f_vector()),
        homology_ranks=reduced_homology_ranks(K),
    )


@app.post("/gale", response_model=ArrangementModel)
def gale_endpoint(req: GaleRequest):
    try:
        A = [[parse_rational(e) for e in row] for row in req.matrix]
        theta = [parse_rational(e) for e in req.theta]
        arr = gale_arrangement(A, theta)
    except InputError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return ArrangementModel(**arrangement_to_dict(arr))


@app.post("/render", response_model=RenderResponse)
def render_endpoint(req: ArrangementRequest):
    arr = _arrangement(req.arrangement)
    if arr.ambient_dim != 2:
        raise HTTPException(status_code=409, detail="render supports m = 2 only")
    bc = bounded_complex(arr, order=req.order)
    return RenderResponse(svg=render_svg(arr, bc))
