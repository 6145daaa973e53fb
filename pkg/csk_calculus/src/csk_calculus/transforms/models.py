from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable

from csk_calculus.core.exceptions import InsufficientOrderError, InvalidSequenceError
from csk_calculus.series.fps import FormalPowerSeries
from csk_calculus.series.rational import format_rational, parse_rational


@dataclass(frozen=True)
class MomentSequence:
    """(m_0, ..., m_N) with m_0 = 1."""

    moments: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        values = tuple(parse_rational(m) for m in self.moments)
        if not values or values[0] != 1:
            raise InvalidSequenceError("moment sequence must start with m_0 = 1")
        object.__setattr__(self, "moments", values)

    @classmethod
    def of(cls, values: Iterable[Any]) -> MomentSequence:
        return cls(tuple(values))

    @property
    def order(self) -> int:
        return len(self.moments) - 1

    def __getitem__(self, n: int) -> Fraction:
        if n < 0 or n > self.order:
            raise InsufficientOrderError(f"moment m_{n} is beyond order {self.order}")
        return self.moments[n]

    def truncate(self, order: int) -> MomentSequence:
        if order > self.order:
            raise InsufficientOrderError(f"cannot raise order {self.order} to {order}")
        return MomentSequence(self.moments[: order + 1])

    def as_series(self) -> FormalPowerSeries:
        """Moment generating function M(z) = sum m_n z^n."""
        return FormalPowerSeries(self.moments)

    def to_dict(self) -> dict[str, Any]:
        return {"order": self.order, "moments": [format_rational(m) for m in self.moments]}


@dataclass(frozen=True)
class FreeCumulantSequence:
    """
    (kappa_1, ..., kappa_N).

    ``formal`` marks sequences whose existence as cumulants of a probability
    measure is not guaranteed (for example convolution powers below 1).
    """

    cumulants: tuple[Fraction, ...]
    formal: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "cumulants", tuple(parse_rational(k) for k in self.cumulants))

    @classmethod
    def of(cls, values: Iterable[Any], *, formal: bool = False) -> FreeCumulantSequence:
        return cls(tuple(values), formal=formal)

    @property
    def order(self) -> int:
        return len(self.cumulants)

    def kappa(self, n: int) -> Fraction:
        """1-based access, kappa(1) is the mean."""
        if n < 1 or n > self.order:
            raise InsufficientOrderError(f"cumulant kappa_{n} is beyond order {self.order}")
        return self.cumulants[n - 1]

    def r_series(self) -> FormalPowerSeries:
        """R(z) = sum kappa_n z^n, order N."""
        return FormalPowerSeries((Fraction(0),) + self.cumulants)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "order": self.order,
            "cumulants": [format_rational(k) for k in self.cumulants],
        }
        if self.formal:
            out["formal"] = True
        return out


@dataclass(frozen=True)
class STransformSeries:
    series: FormalPowerSeries

    @property
    def order(self) -> int:
        return self.series.order

    def to_dict(self) -> dict[str, Any]:
        return {"order": self.order, "s_series": self.series.to_list()}
