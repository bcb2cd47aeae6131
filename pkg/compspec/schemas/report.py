"""Pydantic schemas for verification reports."""

from typing import Literal

from pydantic import BaseModel, Field, model_validator

from compspec.schemas.spectrum import TOLERANCE

Verdict = Literal["confirmed", "tie-within-tolerance", "refuted", "vacuous", "unpredicted"]

TheoremName = Literal["3.1", "3.4", "4.3", "lemma3.2"]

EXTREMAL_INTERPRETATION = (
    "strict inequality read as: minimum attained exactly at the named construction, "
    "strict for every non-isomorphic member of the class"
)


class ExtremalReport(BaseModel):
    """Outcome of one brute-force class scan."""

    theorem: TheoremName
    n: int = Field(..., ge=2)
    kappa: int = Field(..., ge=1)
    diameter_rule: str = Field(..., description="Diameter restriction of the scanned class")
    measure: Literal["lambda_1", "lambda_n"] = Field(
        ..., description="Minimized complement eigenvalue"
    )
    class_size: int = Field(..., ge=0)
    min_value: float | None = None
    runner_up: float | None = Field(
        default=None, description="Smallest value more than the tolerance above the minimum"
    )
    witnesses: list[str] = Field(
        default_factory=list, description="graph6 of the minimizers, one per isomorphism class"
    )
    predicted_value: float | None = None
    predicted_graph: str | None = Field(default=None, description="graph6 of the construction")
    predicted_quartic: list[int] | None = Field(
        default=None, description="Exact coefficients of the defining quartic"
    )
    predicted_in_class: bool | None = None
    attained: bool | None = Field(
        default=None, description="Theorem 3.1 only: whether the bound is reached"
    )
    unrestricted_min_value: float | None = Field(
        default=None, description="Minimum over the class without the diameter restriction"
    )
    variant_values: dict[str, float] = Field(
        default_factory=dict, description="lambda_n of each BB variant complement"
    )
    resolved_variant: str | None = None
    verdict: Verdict
    work_units: int = Field(..., ge=0, description="Edge masks visited")
    audit_notes: list[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_verdict(self) -> "ExtremalReport":
        """A confirmed extremal verdict needs the minimum to match the prediction."""
        if self.verdict == "vacuous" and self.class_size:
            raise ValueError("vacuous verdict on a non-empty class")
        if self.verdict == "confirmed" and self.theorem != "3.1":
            if self.min_value is None or self.predicted_value is None:
                raise ValueError("confirmed verdict without values")
            if abs(self.min_value - self.predicted_value) > TOLERANCE:
                raise ValueError("confirmed verdict with minimum away from the prediction")
        return self


class Lemma32Check(BaseModel):
    """lambda_1(G^c) against lambda_1(B^c(s,t,kappa)) for one minimum cut of G."""

    graph: str
    cut: tuple[int, ...]
    s: int
    t: int
    v: int
    lambda_graph: float
    lambda_bound: float
    rayleigh_gap: float = Field(
        ..., description="x^T A(G^c) x - x^T A(B^c) x for the Perron vector x of B^c"
    )
    holds: bool


class Lemma32Report(BaseModel):
    theorem: Literal["lemma3.2"] = "lemma3.2"
    n: int
    kappa: int
    graphs_checked: int = 0
    cuts_checked: int = 0
    violations: int = 0
    rayleigh_violations: int = 0
    min_margin: float | None = Field(
        default=None, description="Smallest lambda_1(G^c) - lambda_1(B^c) seen"
    )
    graphs_without_v: int = Field(
        default=0, description="Graphs where no minimum cut leaves a vertex free of the cut"
    )
    examples_without_v: list[str] = Field(default_factory=list)
    violation_examples: list[Lemma32Check] = Field(default_factory=list)
    verdict: Verdict = "confirmed"
    work_units: int = 0


class PerturbationReport(BaseModel):
    """Rayleigh-argument check: modifications guided by the least eigenvector of G^c."""

    graph: str
    kind: Literal["add-within-sign", "delete-cross-sign"]
    lambda_n: float
    checked: int = 0
    strict_checked: int = 0
    skipped_disconnecting: int = 0
    violations: int = 0
    max_increase: float | None = Field(
        default=None, description="Largest lambda_n(H^c) - lambda_n(G^c) over checked pairs"
    )

    @property
    def vacuous(self) -> bool:
        return self.checked == 0


class SignPartition(BaseModel):
    """Vertices split by the sign of a vector, with per-component and cut views."""

    plus: tuple[int, ...] = Field(..., description="x(v) >= 0")
    minus: tuple[int, ...] = Field(..., description="x(v) < 0")
    cut_plus: tuple[int, ...] = ()
    cut_minus: tuple[int, ...] = ()
    components_plus: tuple[tuple[int, ...], ...] = ()
    components_minus: tuple[tuple[int, ...], ...] = ()

    @model_validator(mode="after")
    def validate_disjoint(self) -> "SignPartition":
        if set(self.plus) & set(self.minus):
            raise ValueError("plus and minus parts overlap")
        return self
