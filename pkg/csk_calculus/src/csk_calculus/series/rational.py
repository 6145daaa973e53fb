from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable

from csk_calculus.core.exceptions import UsageError


def parse_rational(value: Any) -> Fraction:
    """
    Parse an exact rational from an int, a Fraction or a "p/q" string.

    Floats are rejected: a binary float never carries the intended value exactly.
    """
    if isinstance(value, bool):
        raise UsageError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise UsageError(f"not a rational: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"not a rational: {value!r}") from exc
    raise UsageError(f"not a rational: {value!r}")


def parse_rationals(values: Iterable[Any]) -> tuple[Fraction, ...]:
    return tuple(parse_rational(v) for v in values)


def parse_rational_list(text: str) -> tuple[Fraction, ...]:
    """Comma-separated rationals, e.g. ``"1,0,1/2"``."""
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise UsageError("empty rational list")
    return parse_rationals(parts)


def format_rational(value: Fraction | int) -> str:
    return str(Fraction(value))
