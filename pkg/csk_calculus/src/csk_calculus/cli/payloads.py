from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Annotated, Any

from pydantic import BaseModel, BeforeValidator, ConfigDict, ValidationError

from csk_calculus.core.exceptions import UsageError
from csk_calculus.series.rational import parse_rational


def _rational(value: Any) -> Fraction:
    try:
        return parse_rational(value)
    except UsageError as exc:
        raise ValueError(str(exc)) from exc


RationalValue = Annotated[Fraction, BeforeValidator(_rational)]
RationalList = list[RationalValue]


class Payload(BaseModel):
    """JSON body accepted by every subcommand; keys mirror the vector flags."""

    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True)

    moments: RationalList | None = None
    cumulants: RationalList | None = None
    cumulants2: RationalList | None = None
    s_series: RationalList | None = None
    s_series2: RationalList | None = None
    varfun: RationalList | None = None
    varfun2: RationalList | None = None
    seq: RationalList | None = None
    m_series: RationalList | None = None
    n_series: RationalList | None = None
    recursion: RationalList | None = None
    factors: list[tuple[RationalValue, RationalValue]] | None = None


def load_payload(source: str | None) -> Payload:
    """Read a payload from a file path, or from stdin when ``source`` is "-"."""
    if source is None:
        return Payload()
    try:
        if source == "-":
            text = sys.stdin.read()
        else:
            text = Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read payload: {source}") from exc
    try:
        raw = json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise UsageError(f"payload is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise UsageError("payload root must be an object")
    try:
        return Payload.model_validate(raw)
    except ValidationError as exc:
        raise UsageError(str(exc)) from exc


def _reject_float(text: str) -> Any:
    raise UsageError(f"floating point literal {text} in payload; use \"p/q\" strings")
