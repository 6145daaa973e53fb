from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Any, Iterable

from csk_calculus.core.exceptions import NotInvertibleError
from csk_calculus.core.utils import to_jsonable
from csk_calculus.series.fps import FormalPowerSeries
from csk_calculus.series.rational import format_rational


class VarClass(str, enum.Enum):
    V = "V"
    V_INFINITY = "V_INFINITY"


class Claim(str, enum.Enum):
    IN_V = "IN_V"
    IN_V_INFINITY = "IN_V_INFINITY"
    NOT_IN_V = "NOT_IN_V"
    NOT_IN_V_INFINITY = "NOT_IN_V_INFINITY"
    EVIDENCE_CONSISTENT = "EVIDENCE_CONSISTENT"
    EVIDENCE_REFUTED = "EVIDENCE_REFUTED"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class VarianceFunction:
    """
    Variance function as a series in the mean m.

    ``var_class`` is the class asserted for it by a closed-form theorem or by
    the caller, with ``provenance`` naming the rule; finite-order evidence
    never sets it.
    """

    series: FormalPowerSeries
    var_class: VarClass | None = None
    provenance: str | None = None

    def __post_init__(self) -> None:
        if self.series.coeffs[0] == 0:
            raise NotInvertibleError("variance function must have V(0) != 0")

    @classmethod
    def from_coefficients(
        cls,
        values: Iterable[Any],
        order: int | None = None,
        *,
        var_class: VarClass | None = None,
        provenance: str | None = None,
    ) -> VarianceFunction:
        """Polynomial coefficients; ``order`` pads with exact zeros."""
        coeffs = list(values)
        series = (
            FormalPowerSeries.from_coefficients(coeffs)
            if order is None
            else FormalPowerSeries.from_polynomial(coeffs, order)
        )
        return cls(series, var_class=var_class, provenance=provenance)

    @property
    def normalized(self) -> bool:
        return self.series.coeffs[0] == 1

    @property
    def order(self) -> int:
        return self.series.order

    def with_class(self, var_class: VarClass | None, provenance: str | None) -> VarianceFunction:
        return replace(self, var_class=var_class, provenance=provenance)

    def to_dict(self) -> dict[str, Any]:
        return {
            "varfun": self.series.to_list(),
            "order": self.order,
            "normalized": self.normalized,
            "class": self.var_class.value if self.var_class else None,
            "provenance": self.provenance,
        }


@dataclass(frozen=True)
class MembershipVerdict:
    claim: Claim
    order_checked: int
    witness: Any = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim": self.claim.value,
            "order_checked": self.order_checked,
            "witness": to_jsonable(self.witness),
        }


@dataclass(frozen=True)
class CubicMembership:
    """Both closed-form verdicts for 1 + a m + b m^2 + c m^3."""

    in_v: MembershipVerdict
    in_v_infinity: MembershipVerdict

    def to_dict(self) -> dict[str, Any]:
        return {
            "in_V": self.in_v.claim is Claim.IN_V,
            "in_Vinf": self.in_v_infinity.claim is Claim.IN_V_INFINITY,
            "V": self.in_v.to_dict(),
            "V_infinity": self.in_v_infinity.to_dict(),
        }


def criterion_values(**values: Any) -> dict[str, str]:
    return {k: format_rational(v) for k, v in values.items()}
