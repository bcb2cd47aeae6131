"""Pydantic schemas for quotient quartics and parameter sweep rows."""

from typing import Literal

from pydantic import BaseModel, Field


class Quartic(BaseModel):
    """Even quartic lambda^4 + c2 lambda^2 + c0 with exact integer coefficients."""

    kind: Literal["f", "g"] = Field(..., description="f for B^c, g for BB^c")
    params: dict[str, int] = Field(..., description="Parameters the quartic was built from")
    c4: Literal[1] = 1
    c2: int
    c0: int

    @property
    def discriminant(self) -> int:
        """Discriminant of the quadratic in lambda^2."""
        return self.c2 * self.c2 - 4 * self.c0

    def __call__(self, lam: float) -> float:
        sq = lam * lam
        return sq * sq + self.c2 * sq + self.c0

    def coefficients(self) -> list[int]:
        """Coefficients from lambda^4 down to the constant term."""
        return [self.c4, 0, self.c2, 0, self.c0]


class FSweepRow(BaseModel):
    """One (s,t,kappa) tuple of the f-quartic sweep."""

    s: int
    t: int
    kappa: int
    c2: int
    c0: int
    max_root: float
    shifted_max_root: float = Field(..., description="Largest root of f_{s-1,t+1}")
    theta: float
    monotone: bool = Field(..., description="max_root > shifted_max_root")
    above_theta: bool = Field(..., description="max_root > theta")
    anchor_holds: bool = Field(
        ..., description="max_root > sqrt((kappa+st)/2) and f is negative there"
    )


class GSweepRow(BaseModel):
    """One (n1,n2,kappa) tuple of the g-quartic sweep."""

    n1: int
    n2: int
    kappa: int
    c2: int
    c0: int
    min_root: float
    shifted_min_root: float | None = Field(
        default=None, description="Least root of g_{n1-1,n2+1}; only when n1 > n2 + 1"
    )
    monotone: bool | None = Field(
        default=None, description="min_root > shifted_min_root; only when n1 > n2 + 1"
    )
    above_kappa: bool = Field(..., description="max_root > kappa")
