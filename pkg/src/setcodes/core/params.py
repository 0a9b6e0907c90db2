# setcodes/core/params.py
from __future__ import annotations

import math

from pydantic import BaseModel, ConfigDict, Field, model_validator


def clog2(n: int) -> int:
    """⌈log₂ n⌉ for n ≥ 1."""
    if n < 1:
        raise ValueError(f"clog2 needs n >= 1, got {n}")
    return (n - 1).bit_length()


def log2_int(n: int) -> float:
    """log₂ of an arbitrary-precision positive integer."""
    if n < 1:
        raise ValueError(f"log2 needs n >= 1, got {n}")
    return math.log2(n)


def log2_binom(n: int, m: int) -> float:
    return log2_int(math.comb(n, m))


class Params(BaseModel):
    """Validated (M, L, K); codec layouts derive their own budgets from it."""

    model_config = ConfigDict(frozen=True)

    M: int = Field(..., ge=1, description="Number of strings in a codeword")
    L: int = Field(..., ge=1, description="Length of every string in bits")
    K: int = Field(1, ge=0, description="Substitution budget")

    @model_validator(mode="after")
    def _fits_space(self) -> "Params":
        if self.M > (1 << self.L):
            raise ValueError(f"M={self.M} distinct strings do not fit in {{0,1}}^{self.L}")
        return self

    @property
    def log_ml(self) -> int:
        return clog2(self.M * self.L)

    @property
    def log_m(self) -> int:
        return clog2(self.M)

    def word_space_log2(self) -> float:
        """log₂ C(2^L, M)."""
        return log2_binom(1 << self.L, self.M)
