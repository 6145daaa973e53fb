from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

from csk_calculus.core.exceptions import InsufficientMomentsError
from csk_calculus.series.rational import format_rational, parse_rational


def _strip(values: Iterable[Fraction]) -> tuple[Fraction, ...]:
    out = list(values)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Polynomial:
    """Polynomial in x, lowest degree first; the zero polynomial has no coefficients."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _strip(parse_rational(c) for c in self.coeffs))

    @classmethod
    def constant(cls, value: Any) -> Polynomial:
        return cls((parse_rational(value),))

    @classmethod
    def x(cls) -> Polynomial:
        return cls((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, j: int) -> Fraction:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else Fraction(0)

    def __add__(self, other: Polynomial) -> Polynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self.coefficient(j) + other.coefficient(j) for j in range(n)))

    def __sub__(self, other: Polynomial) -> Polynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self.coefficient(j) - other.coefficient(j) for j in range(n)))

    def __mul__(self, other: Polynomial) -> Polynomial:
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    def scale(self, c: Any) -> Polynomial:
        q = parse_rational(c)
        return Polynomial(tuple(q * a for a in self.coeffs))

    def mul_x(self) -> Polynomial:
        if not self.coeffs:
            return self
        return Polynomial((Fraction(0),) + self.coeffs)

    def evaluate(self, x: Any) -> Fraction:
        q = parse_rational(x)
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * q + a
        return acc

    def integrate(self, moments: Sequence[Fraction]) -> Fraction:
        """Apply the moment functional x^j -> m_j."""
        if self.degree >= len(moments):
            raise InsufficientMomentsError(
                f"degree {self.degree} needs moments up to m_{self.degree}, have {len(moments) - 1}"
            )
        return sum((a * moments[j] for j, a in enumerate(self.coeffs)), Fraction(0))

    def to_list(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs] or ["0"]
