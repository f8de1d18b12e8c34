"""Pydantic request/response models for the HTTP service.

The algebra document mirrors the JSON file format (1-based indices, scalar
coefficients as strings); deep mathematical validation happens in the core
package, these models only pin down the shape.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class FieldModel(BaseModel):
    kind: Literal["Q", "Fp"]
    p: Optional[int] = None


class ProductModel(BaseModel):
    i: int
    j: int
    out: list[tuple[int, str]] = Field(default_factory=list)


class AlgebraDoc(BaseModel):
    name: str = ""
    field: FieldModel
    dim: int
    products: list[ProductModel] = Field(default_factory=list)


class AlgebraRequest(BaseModel):
    algebra: AlgebraDoc


class AnalyzeRequest(AlgebraRequest):
    seed: int = 0
    max_attempts: int = 64


class SeriesRequest(AlgebraRequest):
    subspace: Optional[list[list[str]]] = None


class SubinvariantRequest(AlgebraRequest):
    subspace: list[list[str]]


class CartanRequest(AlgebraRequest):
    seed: int = 0
    max_attempts: int = 64


class TowerRequest(AlgebraRequest):
    max_stages: int = 16


class TheoremsRequest(AlgebraRequest):
    seed: int = 0


class OracleCheckRequest(AlgebraRequest):
    pass


Rows = list[list[str]]


class ValidateResponse(BaseModel):
    name: str
    field: FieldModel
    dim: int
    valid: bool


class SeriesBlockModel(BaseModel):
    dims: list[int]
    terms: list[Rows]
    stabilized_at: int


class SeriesResponse(BaseModel):
    subspace_dim: int
    lower_central: SeriesBlockModel
    derived: SeriesBlockModel
    limit: Rows
    nilpotent: bool
    solvable: bool


class SubinvariantResponse(BaseModel):
    subinvariant: bool
    chain_dims: Optional[list[int]]
    chain: Optional[list[Rows]]
    obstruction: Optional[Rows]


class RadicalResponse(BaseModel):
    radical: Rows
    dim: int


class NilradicalResponse(BaseModel):
    nilradical: Rows
    dim: int


class CartanResponse(BaseModel):
    status: Literal["found", "search_exhausted"]
    cartan: Optional[Rows]
    dim: Optional[int]
    attempts: Optional[int]


class AnalyzeResponse(BaseModel):
    name: str
    field: FieldModel
    dim: int
    valid: bool
    leibniz_kernel: Rows
    left_center: Rows
    right_center: Rows
    center: Rows
    lower_central_dims: list[int]
    derived_dims: list[int]
    limit: Rows
    solvable: bool
    nilpotent: bool
    semisimple: Optional[bool]
    radical: Optional[Rows]
    nilradical: Optional[Rows]
    cartan_status: Literal["found", "search_exhausted"]
    cartan: Optional[Rows]
    notes: list[str]


class TowerStageModel(BaseModel):
    dim: int
    center_dim: int
    inner_dim: int
    der_dim: int
    complete: bool


class TowerResponse(BaseModel):
    stages: list[TowerStageModel]
    terminated: bool
    limit_dim: int
    bound_value: int
    bound_holds: bool


class AlgebraSummary(BaseModel):
    name: str
    field: FieldModel
    dim: int


class CheckModel(BaseModel):
    name: str
    status: Literal["pass", "fail", "skipped", "info"]
    detail: str


class TheoremsResponse(BaseModel):
    algebra: AlgebraSummary
    checks: list[CheckModel]
    counts: dict[str, int]
    all_passed: bool


class OracleCheckResponse(BaseModel):
    algebra: AlgebraSummary
    subalgebras_checked: int
    subinvariance_mismatches: list[Rows]
    closure_seeds_checked: int
    closure_mismatches: list[Rows]
    status: Literal["ok", "mismatch"]


class HealthResponse(BaseModel):
    status: Literal["ok"]
