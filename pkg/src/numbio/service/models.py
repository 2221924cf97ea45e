"""Pydantic response models for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel


class ServiceInfo(BaseModel):
    name: str
    version: str
    endpoints: list[str]


class CvResponse(BaseModel):
    seed: str
    cv: str


class ClsResponse(BaseModel):
    seed: str
    cls: str


class BiographiesResponse(BaseModel):
    seed: str
    biographies: list[str]


class BiographyCheckResponse(BaseModel):
    m: str
    n: str
    is_biography: bool


class CatalogResponse(BaseModel):
    members: list[str]


class AutobiographicalCheckResponse(BaseModel):
    value: str
    autobiographical: bool


class ClassificationResponse(BaseModel):
    seed: str
    verdict: Literal["infinite", "category1", "category2", "category3"]
    failure_depth: int | None


class TrajectoryResponse(BaseModel):
    map: Literal["cv", "cls"]
    seed: str
    prefix: list[str]
    cycle: list[str]


class CycleAbsorption(BaseModel):
    members: list[str]
    absorbed: int


class VerificationResponse(BaseModel):
    map: Literal["cv", "cls"]
    lo: int
    hi: int
    checked: int
    skipped: int
    cycles: list[CycleAbsorption]
    max_prefix: int
    counterexamples: list[str]


class PairResponse(BaseModel):
    a: str
    b: str
    both_legitimate: bool


class PraiseSearchResponse(BaseModel):
    pairs: list[PairResponse]


class PraiseCheckResponse(BaseModel):
    a: str
    b: str
    mutually_praising: bool
