from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

from csk_calculus.core.exceptions import (
    InsufficientOrderError,
    NotInvertibleError,
    ZeroLeadCoefficientError,
)
from csk_calculus.series.polynomial import Polynomial
from csk_calculus.series.rational import format_rational, parse_rational
from csk_calculus.varfun.models import VarianceFunction

log = logging.getLogger("csk_calculus.polys")


class RecursionKind(str, enum.Enum):
    GENERAL = "GENERAL"  # (a_0, ..., a_K), a_0 != 0
    CCRD = "CCRD"  # (b_1, ..., b_(d+1))


@dataclass(frozen=True)
class RecursionSpec:
    coeffs: tuple[Fraction, ...]
    kind: RecursionKind = RecursionKind.GENERAL

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(parse_rational(c) for c in self.coeffs))
        object.__setattr__(self, "kind", RecursionKind(self.kind))

    @classmethod
    def general(cls, values: Iterable[Any]) -> RecursionSpec:
        return cls(tuple(values), RecursionKind.GENERAL)

    @classmethod
    def ccrd(cls, values: Iterable[Any]) -> RecursionSpec:
        return cls(tuple(values), RecursionKind.CCRD)

    def general_coeffs(self) -> tuple[Fraction, ...]:
        """
        (a_0, a_1, ...) of the variance-function recursion.

        The d+2 step form x P_n = P_(n+1) + sum b_k P_(n+1-k) corresponds to
        a_0 = 1, a_1 = b_1, a_2 = b_2 - 1, a_k = b_k for k >= 3.
        """
        if self.kind is RecursionKind.GENERAL:
            return self.coeffs
        b = list(self.coeffs) + [Fraction(0)] * max(0, 2 - len(self.coeffs))
        return (Fraction(1), b[0], b[1] - 1, *b[2:])

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind.value, "coeffs": [format_rational(c) for c in self.coeffs]}


@dataclass(frozen=True)
class PolynomialFamily:
    polys: tuple[Polynomial, ...]
    source: str

    @property
    def order(self) -> int:
        return len(self.polys) - 1

    def to_dict(self) -> dict[str, Any]:
        return {
            "source": self.source,
            "order": self.order,
            "polys": [p.to_list() for p in self.polys],
        }


def _run_recursion(a: Sequence[Fraction], n_max: int) -> tuple[Polynomial, ...]:
    """a_0 P_(n+1) = x P_n - P_(n-1) - sum_(k=1..n) a_k P_(n+1-k), P_(-1) = 0, P_0 = 1."""
    if a[0] == 0:
        raise ZeroLeadCoefficientError("recursion needs a_0 != 0")
    inv_a0 = 1 / a[0]
    polys = [Polynomial.constant(1)]
    for n in range(n_max):
        nxt = polys[n].mul_x()
        if n >= 1:
            nxt = nxt - polys[n - 1]
        for k in range(1, min(n, len(a) - 1) + 1):
            if a[k]:
                nxt = nxt - polys[n + 1 - k].scale(a[k])
        polys.append(nxt.scale(inv_a0))
    return tuple(polys)


def polynomials_from_varfun(v: VarianceFunction, order: int) -> PolynomialFamily:
    """P_0..P_order; P_order uses V through m^(order-1)."""
    if v.series.coeffs[0] == 0:
        raise NotInvertibleError("V(0) must be nonzero")
    if order >= 2 and v.order < order - 1:
        raise InsufficientOrderError(f"P_{order} needs V through m^{order - 1}, have {v.order}")
    polys = _run_recursion(v.series.coeffs, order)
    log.debug("family from varfun", extra={"order": order})
    return PolynomialFamily(polys=polys, source="varfun:" + ",".join(v.series.to_list()))


def polynomials_from_recursion(r: RecursionSpec, order: int) -> PolynomialFamily:
    a = r.general_coeffs()
    if not a or a[0] == 0:
        raise ZeroLeadCoefficientError("recursion needs a_0 != 0")
    polys = _run_recursion(a, order)
    return PolynomialFamily(polys=polys, source=f"recursion:{r.kind.value}")


def associated_varfun(r: RecursionSpec, order: int) -> VarianceFunction:
    """Polynomial variance function whose Taylor coefficients are the a_k."""
    return VarianceFunction.from_coefficients(r.general_coeffs(), order)


def generating_function_identity_check(
    fam: PolynomialFamily, v: VarianceFunction, order: int
) -> bool:
    """
    (sum_(n<=order) P_n z^n)(V(z) + z^2 - z x) == V(z) mod z^(order+1),
    coefficientwise as polynomials in x.
    """
    if fam.order < order or v.order < order:
        raise InsufficientOrderError(
            f"identity through z^{order} needs family and V of that order"
        )
    vc = v.series.coeffs
    polys = fam.polys
    for j in range(order + 1):
        residual = Polynomial.constant(-vc[j])
        for i in range(j + 1):
            residual = residual + polys[j - i].scale(vc[i])
        if j >= 2:
            residual = residual + polys[j - 2]
        if j >= 1:
            residual = residual - polys[j - 1].mul_x()
        if residual.coeffs:
            log.info("generating function identity fails", extra={"z_power": j})
            return False
    return True
