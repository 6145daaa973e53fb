from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from csk_calculus.core.exceptions import InsufficientSequenceError
from csk_calculus.moments.linalg import bareiss_determinant, rational_matrix
from csk_calculus.series.rational import format_rational, parse_rational

log = logging.getLogger("csk_calculus.moments")


class VerdictKind(str, enum.Enum):
    POSITIVE = "POSITIVE"
    REFUTED = "REFUTED"
    DEGENERATE = "DEGENERATE"


@dataclass(frozen=True)
class PsdVerdict:
    kind: VerdictKind
    index: int | None = None  # 0-based minor index
    value: Fraction | None = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"kind": self.kind.value}
        if self.index is not None:
            out["index"] = self.index
        if self.value is not None:
            out["value"] = format_rational(self.value)
        return out


@dataclass(frozen=True)
class HankelReport:
    shift: int
    size: int
    minors: tuple[Fraction, ...]
    verdict: PsdVerdict

    @property
    def last_minor(self) -> Fraction:
        return self.minors[-1]

    def to_dict(self) -> dict[str, Any]:
        return {
            "shift": self.shift,
            "size": self.size,
            "minors": [format_rational(d) for d in self.minors],
            "verdict": self.verdict.to_dict(),
        }


def psd_verdict(minors: Sequence[Fraction] | HankelReport) -> PsdVerdict:
    values = minors.minors if isinstance(minors, HankelReport) else minors
    first_zero: int | None = None
    for i, d in enumerate(values):
        if d < 0:
            if first_zero is not None:
                return PsdVerdict(VerdictKind.DEGENERATE, index=first_zero)
            return PsdVerdict(VerdictKind.REFUTED, index=i, value=Fraction(d))
        if d == 0 and first_zero is None:
            first_zero = i
    if first_zero is not None:
        return PsdVerdict(VerdictKind.DEGENERATE, index=first_zero)
    return PsdVerdict(VerdictKind.POSITIVE)


def hankel_minors(seq: Sequence[Any], *, shift: int = 0, size: int) -> HankelReport:
    """Leading principal minors of (s_(i+j+shift)), i, j < size."""
    values = [parse_rational(v) for v in seq]
    needed = 2 * (size - 1) + shift
    if size < 1 or shift < 0:
        raise InsufficientSequenceError("size must be >= 1 and shift >= 0")
    if needed >= len(values):
        raise InsufficientSequenceError(
            f"size {size} with shift {shift} needs s_{needed}, have {len(values)} terms"
        )
    full = rational_matrix([[values[i + j + shift] for j in range(size)] for i in range(size)])
    minors = tuple(bareiss_determinant(full[:k, :k]) for k in range(1, size + 1))
    verdict = psd_verdict(minors)
    log.debug(
        "hankel minors",
        extra={"shift": shift, "size": size, "verdict": verdict.kind.value},
    )
    return HankelReport(shift=shift, size=size, minors=minors, verdict=verdict)
