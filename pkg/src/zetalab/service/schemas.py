"""Request models for the service endpoints (and the CLI, which builds the
same models from flags). Polynomial coefficients arrive high-to-low degree
everywhere, matching the CLI flag format documented in the README."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class CurveCountRequest(BaseModel):
    p: int
    f: list[int]  # high-to-low degree, monic odd degree
    n_max: int = 7


class CurveZetaRequest(BaseModel):
    p: int
    f: list[int]
    predict: int = 0  # also regenerate N_1..N_predict from the numerator


class SplitCompareRequest(BaseModel):
    f: list[int]
    g: list[int]
    bound: int = 10_000


class DedekindRequest(BaseModel):
    f: list[int]
    s: float
    bound: int = 10_000


class PermGroupSpec(BaseModel):
    domain_size: int
    generators: list[list[int]]


class SubgroupSpec(BaseModel):
    elements: Optional[list[list[int]]] = None
    generators: Optional[list[list[int]]] = None


class GassmannRequest(BaseModel):
    group: PermGroupSpec
    h1: SubgroupSpec
    h2: SubgroupSpec


class BcActRequest(BaseModel):
    level: int
    n: int
    x: int
    t: Optional[float] = None  # also report the time-evolution phase n^{it}


class BcStateRequest(BaseModel):
    level: int
    beta: float
    x0: int = 1
    f: list[tuple[float, float]]  # observable values as [re, im] pairs
    cutoff: Optional[int] = None  # direct-summation oracle path
    tol: Optional[float] = None  # Hurwitz evaluator target tolerance


class BcCheckIsoRequest(BaseModel):
    level: int
    point_map: list[int]
    prime_map: dict[int, int] = Field(default_factory=dict)
    prime_bound: int = 30


class LSeriesRequest(BaseModel):
    modulus: int
    exponents: list[int]
    s: float
    tol: Optional[float] = None


class LFingerprintRequest(BaseModel):
    modulus: int
    s_values: list[int]
    tol: Optional[float] = None


class EpsteinRequest(BaseModel):
    a: float
    b: float
    c: float
    s: float
    method: Literal["accelerated", "direct"] = "accelerated"
    radius: float = 400.0  # direct method only


class EisensteinRequest(BaseModel):
    x: float
    y: float
    s: float


class DilogRequest(BaseModel):
    re: float
    im: float


class TorusZetaRequest(BaseModel):
    basis: list[float]  # v1x, v1y, v2x, v2y
    s: float


class TorusDistanceRequest(BaseModel):
    basis1: list[float]
    basis2: list[float]
    s_lo: float = 2.0
    s_hi: float = 3.0
    grid: int = 1000
