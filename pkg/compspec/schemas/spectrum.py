"""Pydantic schemas for spectra and audit findings."""

import numpy as np
from pydantic import BaseModel, Field, model_validator

# Absolute tolerance for every eigenvalue comparison in the toolkit.
TOLERANCE = 1e-9


class Spectrum(BaseModel):
    """Adjacency eigenvalues sorted descending, with optional unit eigenvectors."""

    values: tuple[float, ...] = Field(..., description="lambda_1 >= ... >= lambda_n")
    vectors: tuple[tuple[float, ...], ...] | None = Field(
        default=None, description="Orthonormal eigenvector per value, same order"
    )
    residual: float = Field(
        default=0.0, ge=0.0, description="max_i ||A x_i - lambda_i x_i||_inf"
    )

    @property
    def spectral_radius(self) -> float:
        return self.values[0]

    @property
    def least(self) -> float:
        return self.values[-1]

    def vector(self, index: int) -> np.ndarray:
        if self.vectors is None:
            raise ValueError("spectrum was computed without eigenvectors")
        return np.asarray(self.vectors[index], dtype=float)

    def to_record(self) -> dict[str, object]:
        """Flat record for report files: sorted values at full precision."""
        return {
            "values": [repr(v) for v in self.values],
            "lambda_1": repr(self.values[0]),
            "lambda_n": repr(self.values[-1]),
            "residual": self.residual,
        }


class AuditRecord(BaseModel):
    """One evaluation of an audited claim: left-hand side against right-hand side."""

    claim: str = Field(..., description="Claim identifier, e.g. transmission-bound")
    instance: str = Field(..., description="What the claim was evaluated on")
    left: float
    right: float
    holds: bool
    gap: float = Field(..., description="left - right")

    @model_validator(mode="after")
    def validate_gap_sign(self) -> "AuditRecord":
        """The gap has to agree with the verdict up to the comparison tolerance."""
        if self.holds and self.gap < -TOLERANCE:
            raise ValueError("claim marked as holding with a negative gap")
        if not self.holds and self.gap > TOLERANCE:
            raise ValueError("claim marked as failing with a positive gap")
        return self

    @classmethod
    def evaluate(
        cls, claim: str, instance: str, left: float, right: float, *, strict: bool = False
    ) -> "AuditRecord":
        """Compare ``left >= right`` (or ``>`` when ``strict``) within the tolerance."""
        gap = left - right
        holds = gap > TOLERANCE if strict else gap >= -TOLERANCE
        return cls(claim=claim, instance=instance, left=left, right=right, holds=holds, gap=gap)
