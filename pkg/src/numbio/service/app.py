"""HTTP service exposing the package operations.

Every endpoint is a stateless wrapper over one library call; nothing is
cached or persisted between requests. Run with:

    uvicorn numbio.service:app
"""

from __future__ import annotations

from typing import Annotated, Literal

from fastapi import FastAPI, HTTPException, Query, Request
from fastapi.responses import JSONResponse, PlainTextResponse

from .. import __version__
from ..biography import biographies, cls, cv, is_biography
from ..digits import NumbioError
from ..dynamics import classify_seed, trajectory, verify_cycles
from ..graphs import build_reach_graph, render_dot
from ..praise import find_praising_pairs, is_mutually_praising
from ..selfdesc import enumerate_autobiographical, is_autobiographical
from .models import (
    AutobiographicalCheckResponse,
    BiographiesResponse,
    BiographyCheckResponse,
    CatalogResponse,
    ClassificationResponse,
    ClsResponse,
    CvResponse,
    PairResponse,
    PraiseCheckResponse,
    PraiseSearchResponse,
    ServiceInfo,
    TrajectoryResponse,
    VerificationResponse,
)

DigitParam = Annotated[str, Query(min_length=1, pattern=r"^[0-9]+$")]
MapParam = Literal["cv", "cls"]

app = FastAPI(
    title="numbio",
    version=__version__,
    description="Biographies of numbers: digit-count self-description and its dynamics.",
)


@app.exception_handler(NumbioError)
async def _domain_error(_: Request, exc: NumbioError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


def _checked_range(lo: int, hi: int) -> None:
    if lo < 0 or lo > hi:
        raise HTTPException(status_code=422, detail="lo must be >= 0 and no greater than hi")


@app.get("/", response_model=ServiceInfo)
def info() -> ServiceInfo:
    routes = sorted(
        {route.path for route in app.routes if getattr(route, "include_in_schema", False)}
    )
    return ServiceInfo(name="numbio", version=__version__, endpoints=routes)


@app.get("/cv", response_model=CvResponse)
def get_cv(s: DigitParam) -> CvResponse:
    return CvResponse(seed=s, cv=cv(s))


@app.get("/cls", response_model=ClsResponse)
def get_cls(s: DigitParam) -> ClsResponse:
    return ClsResponse(seed=s, cls=cls(s))


@app.get("/biographies", response_model=BiographiesResponse)
def get_biographies(s: DigitParam) -> BiographiesResponse:
    return BiographiesResponse(seed=s, biographies=biographies(s))


@app.get("/isbio", response_model=BiographyCheckResponse)
def get_isbio(m: DigitParam, n: DigitParam) -> BiographyCheckResponse:
    return BiographyCheckResponse(m=m, n=n, is_biography=is_biography(m, n))


@app.get("/autobiographical", response_model=CatalogResponse)
def get_catalog() -> CatalogResponse:
    return CatalogResponse(members=enumerate_autobiographical())


@app.get("/autobiographical/check", response_model=AutobiographicalCheckResponse)
def get_autobio_check(s: DigitParam) -> AutobiographicalCheckResponse:
    return AutobiographicalCheckResponse(value=s, autobiographical=is_autobiographical(s))


@app.get("/classify", response_model=ClassificationResponse)
def get_classify(s: DigitParam) -> ClassificationResponse:
    fate = classify_seed(s)
    return ClassificationResponse(
        seed=s, verdict=fate.verdict.value, failure_depth=fate.failure_depth
    )


@app.get("/trajectory", response_model=TrajectoryResponse)
def get_trajectory(
    map: MapParam,
    seed: DigitParam,
    max_steps: Annotated[int, Query(ge=1)] = 1000,
) -> TrajectoryResponse:
    t = trajectory(map, seed, max_steps)
    return TrajectoryResponse(**t.as_dict())


@app.get("/verify", response_model=VerificationResponse)
def get_verify(
    map: MapParam,
    lo: int,
    hi: int,
    max_steps: Annotated[int, Query(ge=1)] = 1000,
    jobs: Annotated[int, Query(ge=1)] = 1,
) -> VerificationResponse:
    _checked_range(lo, hi)
    report = verify_cycles(map, lo, hi, max_steps, jobs)
    return VerificationResponse(**report.as_dict())


@app.get("/praise", response_model=PraiseSearchResponse)
def get_praise(legit_only: bool = False) -> PraiseSearchResponse:
    pairs = find_praising_pairs()
    if legit_only:
        pairs = [p for p in pairs if p.both_legitimate]
    return PraiseSearchResponse(pairs=[PairResponse(**p.as_dict()) for p in pairs])


@app.get("/praise/check", response_model=PraiseCheckResponse)
def get_praise_check(a: DigitParam, b: DigitParam) -> PraiseCheckResponse:
    return PraiseCheckResponse(a=a, b=b, mutually_praising=is_mutually_praising(a, b))


@app.get("/graph", response_class=PlainTextResponse)
def get_graph(
    map: MapParam,
    lo: int,
    hi: int,
    max_steps: Annotated[int, Query(ge=1)] = 1000,
) -> PlainTextResponse:
    _checked_range(lo, hi)
    graph = build_reach_graph(map, lo, hi, max_steps)
    return PlainTextResponse(render_dot(graph), media_type="text/vnd.graphviz")
