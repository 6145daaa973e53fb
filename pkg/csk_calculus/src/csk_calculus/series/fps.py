from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable

from csk_calculus.core.exceptions import (
    InsufficientOrderError,
    NonUnitConstantError,
    NonzeroInnerConstantError,
    NotInvertibleError,
    ZeroConstantTermError,
)
from csk_calculus.series.rational import format_rational, parse_rational

log = logging.getLogger("csk_calculus.series")


@dataclass(frozen=True)
class FormalPowerSeries:
    """
    Truncated power series sum(a_k z^k, k <= order) with exact rational coefficients.

    ``order`` is the index of the last known coefficient; nothing beyond it is claimed.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        values = tuple(parse_rational(c) for c in self.coeffs)
        if not values:
            raise InsufficientOrderError("a series needs at least its constant term")
        object.__setattr__(self, "coeffs", values)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_coefficients(cls, values: Iterable[Any], order: int | None = None) -> FormalPowerSeries:
        """Known coefficients; ``order`` may only truncate, never pad."""
        coeffs = tuple(parse_rational(v) for v in values)
        if order is None:
            return cls(coeffs)
        if order > len(coeffs) - 1:
            raise InsufficientOrderError(
                f"{len(coeffs)} coefficients cannot support order {order}"
            )
        return cls(coeffs[: order + 1])

    @classmethod
    def from_polynomial(cls, values: Iterable[Any], order: int) -> FormalPowerSeries:
        """A polynomial is exact at every order: pad with zeros or drop high terms."""
        coeffs = [parse_rational(v) for v in values][: order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, value: Any, order: int) -> FormalPowerSeries:
        return cls.from_polynomial([value], order)

    @classmethod
    def identity(cls, order: int) -> FormalPowerSeries:
        """The series z."""
        return cls.from_polynomial([0, 1], order)

    def __getitem__(self, k: int) -> Fraction:
        if k < 0 or k > self.order:
            raise InsufficientOrderError(f"coefficient {k} is beyond order {self.order}")
        return self.coeffs[k]

    def __add__(self, other: FormalPowerSeries) -> FormalPowerSeries:
        return series_add(self, other)

    def __sub__(self, other: FormalPowerSeries) -> FormalPowerSeries:
        return series_sub(self, other)

    def __mul__(self, other: FormalPowerSeries) -> FormalPowerSeries:
        return series_mul(self, other)

    def __truediv__(self, other: FormalPowerSeries) -> FormalPowerSeries:
        return series_div(self, other)

    def __neg__(self) -> FormalPowerSeries:
        return series_scale(self, -1)

    def to_list(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    def to_dict(self) -> dict[str, Any]:
        return {"order": self.order, "coeffs": self.to_list()}


def series_truncate(f: FormalPowerSeries, order: int) -> FormalPowerSeries:
    if order > f.order:
        raise InsufficientOrderError(f"cannot raise order {f.order} to {order}")
    if order < 0:
        raise InsufficientOrderError("order must be non-negative")
    return FormalPowerSeries(f.coeffs[: order + 1])


def series_add(a: FormalPowerSeries, b: FormalPowerSeries) -> FormalPowerSeries:
    n = min(a.order, b.order)
    return FormalPowerSeries(tuple(a.coeffs[k] + b.coeffs[k] for k in range(n + 1)))


def series_sub(a: FormalPowerSeries, b: FormalPowerSeries) -> FormalPowerSeries:
    n = min(a.order, b.order)
    return FormalPowerSeries(tuple(a.coeffs[k] - b.coeffs[k] for k in range(n + 1)))


def series_scale(a: FormalPowerSeries, c: Any) -> FormalPowerSeries:
    q = parse_rational(c)
    return FormalPowerSeries(tuple(q * x for x in a.coeffs))


def series_mul(a: FormalPowerSeries, b: FormalPowerSeries) -> FormalPowerSeries:
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(n + 1):
        total = Fraction(0)
        for i in range(k + 1):
            if ac[i] and bc[k - i]:
                total += ac[i] * bc[k - i]
        out.append(total)
    return FormalPowerSeries(tuple(out))


def series_div(a: FormalPowerSeries, b: FormalPowerSeries) -> FormalPowerSeries:
    b0 = b.coeffs[0]
    if b0 == 0:
        raise ZeroConstantTermError("divisor has zero constant term")
    n = min(a.order, b.order)
    q: list[Fraction] = []
    for k in range(n + 1):
        acc = a.coeffs[k]
        for i in range(1, k + 1):
            acc -= b.coeffs[i] * q[k - i]
        q.append(acc / b0)
    return FormalPowerSeries(tuple(q))


def mul_z(f: FormalPowerSeries) -> FormalPowerSeries:
    return FormalPowerSeries((Fraction(0),) + f.coeffs)


def div_z(f: FormalPowerSeries) -> FormalPowerSeries:
    if f.coeffs[0] != 0:
        raise NotInvertibleError("division by z needs a vanishing constant term")
    if f.order == 0:
        raise InsufficientOrderError("division by z of an order-0 series leaves nothing")
    return FormalPowerSeries(f.coeffs[1:])


def series_compose(f: FormalPowerSeries, g: FormalPowerSeries) -> FormalPowerSeries:
    """f(g(z)) by Horner's scheme; g must have zero constant term."""
    if g.coeffs[0] != 0:
        raise NonzeroInnerConstantError("inner series has nonzero constant term")
    n = min(f.order, g.order)
    g_n = series_truncate(g, n)
    acc = FormalPowerSeries.constant(f.coeffs[n], n)
    for j in range(n - 1, -1, -1):
        acc = series_mul(acc, g_n)
        acc = FormalPowerSeries((acc.coeffs[0] + f.coeffs[j],) + acc.coeffs[1:])
    return acc


def series_revert(g: FormalPowerSeries) -> FormalPowerSeries:
    """
    Compositional inverse by Lagrange inversion.

    With phi = z/g(z), the inverse h has [z^n]h = (1/n) [w^(n-1)] phi(w)^n.
    """
    if g.order < 1 or g.coeffs[0] != 0 or g.coeffs[1] == 0:
        raise NotInvertibleError("reversion needs g(0) = 0 and g'(0) != 0")
    n = g.order
    g_over_z = div_z(g)
    phi = series_div(FormalPowerSeries.constant(1, n - 1), g_over_z)
    out = [Fraction(0)]
    power = FormalPowerSeries.constant(1, n - 1)
    for k in range(1, n + 1):
        power = series_mul(power, phi)
        out.append(power.coeffs[k - 1] / k)
    log.debug("reverted series", extra={"order": n})
    return FormalPowerSeries(tuple(out))


def series_pow_rational(base: FormalPowerSeries, p: Any) -> FormalPowerSeries:
    """
    base^p for base(0) = 1, by the J.C.P. Miller recurrence

        n g_n = sum_{k=1..n} (k (p + 1) - n) f_k g_{n-k}.
    """
    if base.coeffs[0] != 1:
        raise NonUnitConstantError("rational power needs constant term 1")
    exponent = parse_rational(p)
    f = base.coeffs
    g = [Fraction(1)]
    for n in range(1, base.order + 1):
        total = sum(((k * (exponent + 1) - n) * f[k] * g[n - k] for k in range(1, n + 1)), Fraction(0))
        g.append(total / n)
    return FormalPowerSeries(tuple(g))


def series_substitute_scale(f: FormalPowerSeries, t: Any) -> FormalPowerSeries:
    """f(t z)."""
    q = parse_rational(t)
    out = []
    power = Fraction(1)
    for c in f.coeffs:
        out.append(c * power)
        power *= q
    return FormalPowerSeries(tuple(out))


def series_reflect(f: FormalPowerSeries) -> FormalPowerSeries:
    """f(-z)."""
    return series_substitute_scale(f, -1)


def series_derivative(f: FormalPowerSeries) -> FormalPowerSeries:
    if f.order == 0:
        raise InsufficientOrderError("derivative of an order-0 series leaves nothing")
    return FormalPowerSeries(tuple(k * f.coeffs[k] for k in range(1, f.order + 1)))
