from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

import numpy as np

from csk_calculus.core.exceptions import (
    InsufficientMomentsError,
    NotNormalizedError,
    ParameterOutOfRangeError,
)
from csk_calculus.moments.hankel import HankelReport, VerdictKind, hankel_minors
from csk_calculus.polys.families import PolynomialFamily, polynomials_from_varfun
from csk_calculus.series.polynomial import Polynomial
from csk_calculus.series.rational import format_rational
from csk_calculus.transforms.models import MomentSequence
from csk_calculus.varfun.bijection import moments_from_varfun
from csk_calculus.varfun.models import VarianceFunction

log = logging.getLogger("csk_calculus.polys")


@dataclass(frozen=True, eq=False)
class GramMatrix:
    entries: np.ndarray

    @property
    def order(self) -> int:
        return self.entries.shape[0] - 1

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        return self.entries[idx]

    def to_dict(self) -> dict[str, Any]:
        return {
            "order": self.order,
            "entries": [[format_rational(v) for v in row] for row in self.entries.tolist()],
        }


@dataclass(frozen=True)
class Violation:
    n: int
    k: int
    value: Fraction

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "k": self.k, "value": format_rational(self.value)}


@dataclass(frozen=True)
class DOrthogonalityReport:
    d: int
    pattern_ok: bool
    violations: tuple[Violation, ...]
    hankel_evidence: HankelReport
    order_checked: int

    @property
    def degenerate(self) -> bool:
        return self.hankel_evidence.verdict.kind is VerdictKind.DEGENERATE

    def to_dict(self) -> dict[str, Any]:
        return {
            "d": self.d,
            "pattern_ok": self.pattern_ok,
            "violations": [v.to_dict() for v in self.violations],
            "hankel_evidence": self.hankel_evidence.to_dict(),
            "degenerate": self.degenerate,
            "order_checked": self.order_checked,
        }


def gram_matrix(fam: PolynomialFamily, m: MomentSequence) -> GramMatrix:
    """G[n][k] = L(P_n P_k) under the moment functional of m."""
    n_max = fam.order
    if m.order < 2 * n_max:
        raise InsufficientMomentsError(
            f"Gram matrix of P_0..P_{n_max} needs moments through m_{2 * n_max}, have {m.order}"
        )
    entries = np.full((n_max + 1, n_max + 1), Fraction(0), dtype=object)
    for n in range(n_max + 1):
        for k in range(n + 1):
            value = (fam.polys[n] * fam.polys[k]).integrate(m.moments)
            entries[n, k] = value
            entries[k, n] = value
    return GramMatrix(entries)


def _zero_pattern(
    integral: Callable[[int, int], Fraction], n_max: int, d: int, k_max: int
) -> list[Violation]:
    out: list[Violation] = []
    for n in range(1, n_max + 1):
        value = integral(n, 0)
        if value != 0:
            out.append(Violation(n=n, k=0, value=value))
    for k in range(1, k_max + 1):
        for n in range(2 + (k - 1) * d, n_max + 1):
            value = integral(n, k)
            if value != 0:
                out.append(Violation(n=n, k=k, value=value))
    return out


def d_orthogonality_check(v: VarianceFunction, d: int, order: int) -> DOrthogonalityReport:
    """
    Zero pattern L(P_n) = 0 (n >= 1) and G[n][k] = 0 for n >= 2 + (k-1) d.

    Hankel positivity of the underlying moments is reported separately; a
    functional that is not positive can satisfy the pattern vacuously.
    """
    if not v.normalized:
        raise NotNormalizedError(f"V(0) = {v.series.coeffs[0]}, expected 1")
    if d < 1 or order < d + 3:
        raise ParameterOutOfRangeError(f"need d >= 1 and order >= d + 3, got d={d}, order={order}")
    moments = moments_from_varfun(v, 2 * order)
    fam = polynomials_from_varfun(v, order)
    gram = gram_matrix(fam, moments)
    violations = _zero_pattern(lambda n, k: gram[n, k], order, d, order)
    evidence = hankel_minors(moments.moments, shift=0, size=order + 1)
    log.info(
        "d-orthogonality",
        extra={"d": d, "order": order, "violations": len(violations)},
    )
    return DOrthogonalityReport(
        d=d,
        pattern_ok=not violations,
        violations=tuple(violations),
        hankel_evidence=evidence,
        order_checked=order,
    )


def moment_pattern_check(
    v: VarianceFunction, d: int, order: int, *, k_max: int = 3
) -> tuple[Violation, ...]:
    """L(x^k P_n) = 0 for n >= 2 + (k-1) d, 1 <= k <= k_max, plus L(P_n) = 0."""
    if not v.normalized:
        raise NotNormalizedError(f"V(0) = {v.series.coeffs[0]}, expected 1")
    moments = moments_from_varfun(v, order + k_max).moments
    fam = polynomials_from_varfun(v, order)
    powers = [Polynomial.constant(1)]
    for _ in range(k_max):
        powers.append(powers[-1].mul_x())

    def integral(n: int, k: int) -> Fraction:
        return (powers[k] * fam.polys[n]).integrate(moments)

    return tuple(_zero_pattern(integral, order, d, k_max))
