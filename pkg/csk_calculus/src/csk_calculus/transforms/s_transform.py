from __future__ import annotations

import logging
from typing import Any

from csk_calculus.core.exceptions import (
    InsufficientOrderError,
    ParameterOutOfRangeError,
    ZeroConstantTermError,
    ZeroMeanError,
)
from csk_calculus.series.fps import (
    FormalPowerSeries,
    div_z,
    mul_z,
    series_add,
    series_div,
    series_mul,
    series_pow_rational,
    series_revert,
    series_sub,
)
from csk_calculus.series.rational import parse_rational
from csk_calculus.transforms.models import MomentSequence, STransformSeries

log = logging.getLogger("csk_calculus.transforms")


def moments_to_S(m: MomentSequence) -> STransformSeries:
    """
    S solving M((z/(1+z)) S(z)) = 1 + z.

    With psi = M - 1 and chi its inverse, S = chi (1+z)/z. Moments through m_N
    determine S through z^(N-1).
    """
    if m.order < 1:
        raise InsufficientOrderError("S-transform needs m_1")
    if m.moments[1] == 0:
        raise ZeroMeanError("S-transform is undefined for zero mean")
    n = m.order
    psi = series_sub(m.as_series(), FormalPowerSeries.constant(1, n))
    chi = series_revert(psi)
    s = series_mul(div_z(chi), FormalPowerSeries.from_polynomial([1, 1], n - 1))
    log.debug("moments -> S", extra={"order": s.order})
    return STransformSeries(s)


def moments_from_S(s: STransformSeries) -> MomentSequence:
    """Inverse of moments_to_S: an order-K S gives moments through m_(K+1)."""
    k = s.order
    if s.series.coeffs[0] == 0:
        raise ZeroConstantTermError("S-transform must have nonzero constant term")
    chi = mul_z(series_div(s.series, FormalPowerSeries.from_polynomial([1, 1], k)))
    psi = series_revert(chi)
    big_m = series_add(FormalPowerSeries.constant(1, k + 1), psi)
    return MomentSequence(big_m.coeffs)


def free_multiplicative_convolve(s1: STransformSeries, s2: STransformSeries) -> MomentSequence:
    product = series_mul(s1.series, s2.series)
    if product.coeffs[0] == 0:
        raise ZeroConstantTermError("product of S-transforms has zero constant term")
    return moments_from_S(STransformSeries(product))


def point_mass_S(a: Any, order: int) -> STransformSeries:
    """delta_a has S = 1/a."""
    q = parse_rational(a)
    if q == 0:
        raise ZeroMeanError("point mass at 0 has no S-transform")
    return STransformSeries(FormalPowerSeries.constant(1 / q, order))


def marchenko_pastur_S(lam: Any, order: int) -> STransformSeries:
    """pi_lambda has S = 1/(lambda + z)."""
    q = parse_rational(lam)
    if q <= 0:
        raise ParameterOutOfRangeError("lambda must be positive")
    return STransformSeries(
        series_div(FormalPowerSeries.constant(1, order), FormalPowerSeries.from_polynomial([q, 1], order))
    )


def fuss_catalan_power(b: Any, p: Any, order: int) -> MomentSequence:
    """Moments through m_order of the law with S(z) = (1 + b z)^(-p)."""
    bq = parse_rational(b)
    pq = parse_rational(p)
    if bq <= 0 or pq <= 0:
        raise ParameterOutOfRangeError("b and p must be positive")
    if max(pq, 1 / bq) < 1:
        raise ParameterOutOfRangeError("need max(p, 1/b) >= 1")
    if order < 1:
        raise InsufficientOrderError("order must be at least 1")
    base = FormalPowerSeries.from_polynomial([1, bq], order - 1)
    return moments_from_S(STransformSeries(series_pow_rational(base, -pq)))
