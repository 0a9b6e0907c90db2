# setcodes/schemas.py
from pathlib import Path
from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from setcodes.codecs.base import Codec
from setcodes.config.default import DEFAULT_GUARD, DEFAULT_SEED, DEFAULT_TRIALS, DEFAULT_WORKERS, SCHEMA_VERSION
from setcodes.config.settings import Settings
from setcodes.core.params import Params


class Report(BaseModel):
    model_config = ConfigDict(extra="forbid")

    schema_version: int = Field(default=SCHEMA_VERSION)


class ErrorObject(BaseModel):
    code: int
    message: str
    data: Optional[Any] = None
    reason: Optional[str] = None


class ErrorReport(Report):
    error: ErrorObject


# ───── Analysis ─────
class BallReport(Report):
    center: list[str]
    K: int
    count: int
    upper_bound: int
    tight_expected: bool
    members: list[list[str]]


class ConfusableReport(Report):
    center: list[str]
    K: int
    ball_count: int
    confusable_count: int
    max_reverse: int
    reverse_bound: int


class BoundaryReport(Report):
    center: list[str]
    epsilon: float
    boundary_size: int
    influence: float
    ball_size: int
    ball_covers_boundary: bool
    isoperimetric_holds: bool


class WordReport(Report):
    """Ball, confusable-set and boundary figures for one received word."""

    center: list[str]
    K: int
    passed: bool
    ball: BallReport
    confusable: Optional[ConfusableReport] = None
    boundary: Optional[BoundaryReport] = None
    violations: list[str] = Field(default_factory=list)


class BoundReport(Report):
    M: int
    L: int
    K: int
    epsilon: float
    alpha: float
    existential_upper: float
    existential_chain: float
    single_lower: Optional[float] = None
    multi_lower_main: Optional[float] = None
    multi_lower_chain: Optional[float] = None
    constructions: dict[str, float] = Field(default_factory=dict)
    anchor_terms: dict[str, float] = Field(default_factory=dict)
    codec: Optional[str] = None
    redundancy: Optional[float] = None
    ratio_to_upper: Optional[float] = None
    ratio_to_lower: Optional[float] = None
    construction_holds: Optional[bool] = None


# ───── Verification ─────
class CheckResult(BaseModel):
    name: str
    description: Optional[str] = None
    passed: bool
    instances: int
    violations: list[dict[str, Any]] = Field(default_factory=list)


class VerifyReport(Report):
    scope: dict[str, int]
    passed: bool
    checks: list[CheckResult] = Field(default_factory=list)
    word: Optional[WordReport] = None


# ───── Simulation ─────
class SimulationReport(Report):
    codec: str
    M: int
    L: int
    K: int
    seed: int
    trials: int
    weight: int
    exhaustive: bool
    patterns: int
    successes: int
    miscorrections: int
    failures: dict[str, int] = Field(default_factory=dict)
    success_rate: float
    rng: str
    wall_time_s: Optional[float] = None


class CodewordReport(Report):
    codec: str
    M: int
    L: int
    K: int
    message: str
    word: list[str]


# ───── Run configuration ─────
class RunConfig(BaseModel):
    """One CLI invocation after flags, environment and defaults are merged."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    command: Literal["encode", "decode", "simulate", "bounds", "verify"]
    codec: Codec = Codec.SINGLE
    M: Optional[int] = Field(default=None, ge=1)
    L: Optional[int] = Field(default=None, ge=1)
    K: Optional[int] = Field(default=None, ge=0)
    seed: int = Field(default=DEFAULT_SEED, ge=0, lt=1 << 64)
    trials: int = Field(default=DEFAULT_TRIALS, ge=0)
    patterns: int = Field(default=1, ge=1, description="Random patterns per trial")
    weight: Optional[int] = Field(default=None, ge=0, description="Exact substitutions per pattern; defaults to K")
    exhaustive: bool = False
    guard: int = Field(default=DEFAULT_GUARD, ge=1)
    workers: int = Field(default=DEFAULT_WORKERS, ge=1)
    cache_dir: Optional[Path] = None
    input: Optional[Path] = None
    output: Optional[Path] = None
    message: Optional[str] = None
    checks: Optional[list[str]] = None
    as_json: bool = Field(default=False, alias="json")
    timing: bool = False

    @model_validator(mode="after")
    def _needs_params(self) -> "RunConfig":
        if self.command != "verify" and (self.M is None or self.L is None):
            raise ValueError(f"{self.command} needs --M and --L")
        return self

    def params(self) -> Params:
        return Params(M=self.M, L=self.L, K=1 if self.K is None else self.K)

    def settings(self, log_level: str | int) -> Settings:
        return Settings(log_level=log_level, guard=self.guard, cache_dir=self.cache_dir, workers=self.workers)

    @property
    def pattern_weight(self) -> int:
        return self.params().K if self.weight is None else self.weight
