from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from csk_calculus.core.exceptions import InconsistentPairError, InsufficientOrderError
from csk_calculus.polys.families import PolynomialFamily
from csk_calculus.series.fps import (
    FormalPowerSeries,
    series_scale,
    series_sub,
    series_substitute_scale,
    series_truncate,
)
from csk_calculus.series.polynomial import Polynomial
from csk_calculus.series.rational import format_rational
from csk_calculus.transforms.models import MomentSequence
from csk_calculus.varfun.bijection import varfun_from_centered_moments
from csk_calculus.varfun.models import VarianceFunction

log = logging.getLogger("csk_calculus.polys")


@dataclass(frozen=True)
class GeneralReduction:
    t: Fraction
    varfun: VarianceFunction
    order_checked: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "t": format_rational(self.t),
            "varfun": self.varfun.to_dict(),
            "order_checked": self.order_checked,
        }


def reduce_general_gf(
    m_series: FormalPowerSeries, n_series: FormalPowerSeries, m: MomentSequence
) -> GeneralReduction:
    """
    Reduce a generating function M(z)/(N(z) - z x) to the variance-function form.

    With V the variance function of m and t = V(0)/M(0), requires
    M(z) = V(tz)/t and N(z) = M(z) + t z^2; then T_n = t^n P_n.
    """
    if m_series.coeffs[0] == 0 or m_series.coeffs[0] != n_series.coeffs[0]:
        raise InconsistentPairError("need M(0) = N(0) != 0")
    v = varfun_from_centered_moments(m)
    t = v.series.coeffs[0] / m_series.coeffs[0]
    k = min(m_series.order, n_series.order, v.order)

    expected_m = series_scale(series_substitute_scale(series_truncate(v.series, k), t), 1 / t)
    if series_truncate(m_series, k) != expected_m:
        raise InconsistentPairError("M(z) does not match V(tz)/t")
    diff = series_sub(series_truncate(n_series, k), series_truncate(m_series, k))
    if diff != FormalPowerSeries.from_polynomial([0, 0, t], k):
        raise InconsistentPairError("N(z) - M(z) is not t z^2")
    log.info("general generating function reduced", extra={"t": str(t), "order": k})
    return GeneralReduction(t=t, varfun=v, order_checked=k)


def polynomials_from_general_gf(
    m_series: FormalPowerSeries, n_series: FormalPowerSeries, order: int
) -> PolynomialFamily:
    """Coefficients T_0..T_order of M(z)/(N(z) - z x) as polynomials in x."""
    if order > min(m_series.order, n_series.order):
        raise InsufficientOrderError(f"T_{order} needs M and N through z^{order}")
    n0 = n_series.coeffs[0]
    if n0 == 0:
        raise InconsistentPairError("N(0) must be nonzero")
    inv = 1 / n0
    ts: list[Polynomial] = []
    for j in range(order + 1):
        acc = Polynomial.constant(m_series.coeffs[j])
        if j >= 1:
            acc = acc + ts[j - 1].mul_x()
        for i in range(1, j + 1):
            if n_series.coeffs[i]:
                acc = acc - ts[j - i].scale(n_series.coeffs[i])
        ts.append(acc.scale(inv))
    return PolynomialFamily(polys=tuple(ts), source="general-gf")
