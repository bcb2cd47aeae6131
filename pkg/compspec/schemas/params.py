"""Parameter schemas for the extremal families and the enumeration filter."""

from typing import Any, Literal

from pydantic import BaseModel, Field, ValidationError, ValidationInfo, model_validator

from compspec.errors import ParameterError
from compspec.schemas.graph import MAX_VERTICES


def _parameter_error(exc: ValidationError) -> ParameterError:
    """First pydantic error as a ParameterError naming the violated invariant."""
    first = exc.errors()[0]
    message = str(first["msg"]).removeprefix("Value error, ")
    location = ".".join(str(part) for part in first.get("loc", ()))
    return ParameterError(f"{location}: {message}" if location else message)


def _context(info: ValidationInfo) -> dict[str, Any]:
    return info.context or {}


class BParams(BaseModel):
    """
    Sizes of G_s, G_t and the cut for the families calB(s,t,kappa) and B(s,t,kappa).

    Validation context keys:
        family: "B" (default) or "calB"; calB only needs t >= 1
        allow_unordered: accept s > t (cut profiles of arbitrary graphs)
    """

    s: int = Field(..., ge=1, description="|V(G_s)|")
    t: int = Field(..., ge=1, description="|V(G_t)|, including v for family B")
    kappa: int = Field(..., ge=1, description="Cut size")

    @property
    def n(self) -> int:
        return self.s + self.t + self.kappa

    @model_validator(mode="after")
    def validate_family(self, info: ValidationInfo) -> "BParams":
        context = _context(info)
        family = context.get("family", "B")
        if self.n > MAX_VERTICES:
            raise ValueError(f"s + t + kappa = {self.n} exceeds {MAX_VERTICES} vertices")
        if family == "B":
            if self.t < 2:
                raise ValueError("t >= 2 required for family B")
            if self.t - 1 < self.kappa:
                raise ValueError("t-1 >= kappa required for family B")
        if not context.get("allow_unordered", False) and self.s > self.t:
            raise ValueError(f"s <= t required for family {family}")
        return self

    @classmethod
    def for_B(cls, s: int, t: int, kappa: int, *, allow_unordered: bool = False) -> "BParams":
        """
        Validated parameters for B(s,t,kappa).

        Raises:
            ParameterError: naming the first violated invariant
        """
        try:
            return cls.model_validate(
                {"s": s, "t": t, "kappa": kappa},
                context={"family": "B", "allow_unordered": allow_unordered},
            )
        except ValidationError as exc:
            raise _parameter_error(exc) from exc

    @classmethod
    def for_calB(cls, s: int, t: int, kappa: int, *, allow_unordered: bool = False) -> "BParams":
        """Validated parameters for calB(s,t,kappa); t - 1 >= kappa is not needed."""
        try:
            return cls.model_validate(
                {"s": s, "t": t, "kappa": kappa},
                context={"family": "calB", "allow_unordered": allow_unordered},
            )
        except ValidationError as exc:
            raise _parameter_error(exc) from exc


class BBParams(BaseModel):
    """Clique sizes and cut size for BB(n1,n2;kappa), with the cross-edge pattern."""

    n1: int = Field(..., ge=1)
    n2: int = Field(..., ge=1)
    kappa: int = Field(..., ge=1)
    variant: Literal["join", "matching"] = "join"

    @property
    def n(self) -> int:
        return self.n1 + self.n2

    @model_validator(mode="after")
    def validate_sizes(self) -> "BBParams":
        if self.n > MAX_VERTICES:
            raise ValueError(f"n1 + n2 = {self.n} exceeds {MAX_VERTICES} vertices")
        if self.n1 < self.kappa or self.n2 < self.kappa:
            raise ValueError("n1 >= kappa and n2 >= kappa required for family BB")
        if self.n1 + self.n2 <= 2 * self.kappa:
            raise ValueError("n1 + n2 > 2*kappa required for family BB")
        if self.n1 < self.n2:
            raise ValueError("n1 >= n2 required for family BB")
        return self

    @classmethod
    def build(
        cls, n1: int, n2: int, kappa: int, variant: Literal["join", "matching"] = "join"
    ) -> "BBParams":
        """
        Validated parameters for BB(n1,n2;kappa).

        Raises:
            ParameterError: naming the first violated invariant
        """
        try:
            return cls(n1=n1, n2=n2, kappa=kappa, variant=variant)
        except ValidationError as exc:
            raise _parameter_error(exc) from exc

    @classmethod
    def balanced(cls, n: int, kappa: int, variant: Literal["join", "matching"] = "join") -> "BBParams":
        """BB(ceil(n/2), floor(n/2); kappa)."""
        return cls.build((n + 1) // 2, n // 2, kappa, variant)


DiameterRule = Literal["any", "exactly-2", "at-least-3"]


class ClassFilter(BaseModel):
    """Membership test for the class of connected n-vertex graphs with connectivity kappa."""

    n: int = Field(..., ge=2)
    kappa: int = Field(..., ge=1)
    diameter_rule: DiameterRule = "any"

    @model_validator(mode="after")
    def validate_kappa(self) -> "ClassFilter":
        if self.kappa > self.n - 1:
            raise ValueError("1 <= kappa <= n-1 required")
        return self

    @classmethod
    def build(cls, n: int, kappa: int, diameter_rule: DiameterRule = "any") -> "ClassFilter":
        try:
            return cls(n=n, kappa=kappa, diameter_rule=diameter_rule)
        except ValidationError as exc:
            raise _parameter_error(exc) from exc
