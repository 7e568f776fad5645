"""Pydantic request/response models for the HTTP service."""

from pydantic import BaseModel, Field, model_validator

from .suites import SUITE_NAMES

SUITE_CHOICES = SUITE_NAMES + ("all",)


class ConstantsRequest(BaseModel):
    n: int = Field(ge=3, description="dimension")
    c: float = Field(default=0.0, description="boundary constant")


class ConstantsResponse(BaseModel):
    n: int
    c: float
    t_c: float
    t_c_extrapolated: bool
    A: float
    B: float
    S_c_closed: float
    S_c_integral: float
    lambda_: float = Field(alias="lambda")
    tool_version: str
    cap_angle: float | None = None
    cap_boundary_volume: float | None = None

    model_config = {"populate_by_name": True}


class QMatrixRequest(BaseModel):
    n: int = Field(ge=7, description="dimension")
    c: float = Field(default=0.0, le=0.0, description="boundary constant (<= 0)")
    a: float = Field(default=2.0 / 3.0, description="test-vector parameter")


class QMatrixResponse(BaseModel):
    n: int
    c: float
    t_c: float
    a: float
    admissible_a: bool
    kappa: list[float]
    kappa_q_kappa: float
    negative: bool
    reduced_value_matrix_route: float
    reduced_value_closed_form: float
    congruence_scale: float
    q_form1: list[list[float]]
    q_form2: list[list[float]]
    q_bar: list[list[float]]
    tool_version: str


class ThresholdRequest(BaseModel):
    n_min: int = Field(ge=7)
    n_max: int = Field(ge=7)
    tol: float = Field(default=1e-8, gt=0.0)

    @model_validator(mode="after")
    def _ordered(self):
        if self.n_min > self.n_max:
            raise ValueError("need n_min <= n_max")
        return self


class ThresholdRow(BaseModel):
    n: int
    c0: float


class ThresholdResponse(BaseModel):
    n_min: int
    n_max: int
    tol: float
    rows: list[ThresholdRow]
    tool_version: str


class VerifyRequest(BaseModel):
    suite: str = Field(default="all")
    seed: int = Field(default=42, ge=0)
    tol: float | None = Field(default=None, gt=0.0)
    deterministic: bool = False

    @model_validator(mode="after")
    def _known_suite(self):
        if self.suite not in SUITE_CHOICES:
            raise ValueError(f"suite must be one of {', '.join(SUITE_CHOICES)}")
        return self


class VerifyCase(BaseModel):
    name: str
    provenance: str
    expected: float | None
    computed: float
    tol: float
    pass_: bool = Field(alias="pass")

    model_config = {"populate_by_name": True}


class VerifySummary(BaseModel):
    pass_: int = Field(alias="pass")
    fail: int

    model_config = {"populate_by_name": True}


class VerifyResponse(BaseModel):
    suite: str
    seed: int
    tool_version: str
    timestamp: str | None = None
    cases: list[VerifyCase]
    summary: VerifySummary


class HealthResponse(BaseModel):
    status: str
    tool_version: str
