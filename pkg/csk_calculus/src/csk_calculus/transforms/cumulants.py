from __future__ import annotations

import logging
from fractions import Fraction
from math import comb, prod
from typing import Any

from csk_calculus.core.constants import ORACLE_CAP_DEFAULT
from csk_calculus.core.exceptions import (
    InsufficientOrderError,
    OracleCapExceededError,
    OrderMismatchError,
    ParameterOutOfRangeError,
    ZeroDilationError,
)
from csk_calculus.series.fps import (
    FormalPowerSeries,
    div_z,
    mul_z,
    series_compose,
    series_div,
    series_revert,
    series_sub,
)
from csk_calculus.series.rational import parse_rational
from csk_calculus.transforms.models import FreeCumulantSequence, MomentSequence
from csk_calculus.transforms.noncrossing import block_size_profile

log = logging.getLogger("csk_calculus.transforms")


def moments_to_free_cumulants(m: MomentSequence) -> FreeCumulantSequence:
    """R(z M(z)) + 1 = M(z), so R = M o revert(z M) - 1."""
    n = m.order
    big_m = m.as_series()
    inverse = series_revert(mul_z(big_m))
    r = series_sub(series_compose(big_m, inverse), FormalPowerSeries.constant(1, n))
    log.debug("moments -> cumulants", extra={"order": n})
    return FreeCumulantSequence(r.coeffs[1:])


def free_cumulants_to_moments(k: FreeCumulantSequence) -> MomentSequence:
    """w = z M(z) is the inverse of w / (1 + R(w))."""
    n = k.order
    one = FormalPowerSeries.constant(1, n)
    g = mul_z(series_div(one, one + k.r_series()))
    w = series_revert(g)
    log.debug("cumulants -> moments", extra={"order": n})
    return MomentSequence(div_z(w).coeffs)


def moments_via_noncrossing(
    k: FreeCumulantSequence,
    n: int,
    *,
    cap: int = ORACLE_CAP_DEFAULT,
) -> Fraction:
    """Brute-force moment-cumulant formula over non-crossing partitions."""
    if n < 0:
        raise ParameterOutOfRangeError(f"moment index must be non-negative, got {n}")
    if n > cap:
        raise OracleCapExceededError(f"oracle enumeration capped at n={cap}, asked for {n}")
    if n > k.order:
        raise InsufficientOrderError(f"m_{n} needs cumulants up to kappa_{n}, have {k.order}")
    total = Fraction(0)
    for sizes, count in block_size_profile(n):
        total += count * prod((k.kappa(s) for s in sizes), start=Fraction(1))
    return total


def dilate(m: MomentSequence, t: Any) -> MomentSequence:
    """Push-forward under x -> t x: m_n -> t^n m_n."""
    q = parse_rational(t)
    if q == 0:
        raise ZeroDilationError("dilation by 0")
    return MomentSequence(tuple(q**j * mj for j, mj in enumerate(m.moments)))


def dilate_cumulants(k: FreeCumulantSequence, t: Any) -> FreeCumulantSequence:
    q = parse_rational(t)
    if q == 0:
        raise ZeroDilationError("dilation by 0")
    return FreeCumulantSequence(
        tuple(q ** (j + 1) * kj for j, kj in enumerate(k.cumulants)), formal=k.formal
    )


def free_additive_convolve(
    k1: FreeCumulantSequence, k2: FreeCumulantSequence
) -> FreeCumulantSequence:
    if k1.order != k2.order:
        raise OrderMismatchError(f"cumulant orders differ: {k1.order} vs {k2.order}")
    return FreeCumulantSequence(
        tuple(a + b for a, b in zip(k1.cumulants, k2.cumulants)),
        formal=k1.formal or k2.formal,
    )


def free_convolution_power(k: FreeCumulantSequence, t: Any) -> FreeCumulantSequence:
    """kappa_n -> t kappa_n; powers below 1 are tagged formal."""
    q = parse_rational(t)
    formal = k.formal or q < 1
    if q < 1:
        log.info("formal convolution power", extra={"t": str(q)})
    return FreeCumulantSequence(tuple(q * kj for kj in k.cumulants), formal=formal)


def translate(k: FreeCumulantSequence, s: Any) -> FreeCumulantSequence:
    """Translation by s shifts the mean cumulant only."""
    if k.order < 1:
        raise InsufficientOrderError("translation needs kappa_1")
    q = parse_rational(s)
    return FreeCumulantSequence((k.cumulants[0] + q,) + k.cumulants[1:], formal=k.formal)


def translate_moments_binomial(m: MomentSequence, s: Any) -> MomentSequence:
    """Moments of the measure shifted by s: E(X+s)^n by binomial expansion."""
    q = parse_rational(s)
    out = []
    for n in range(m.order + 1):
        out.append(sum((comb(n, j) * q ** (n - j) * m.moments[j] for j in range(n + 1)), Fraction(0)))
    return MomentSequence(tuple(out))


def marchenko_pastur_cumulants(lam: Any, order: int) -> FreeCumulantSequence:
    """Free Poisson law pi_lambda: every free cumulant equals lambda."""
    q = parse_rational(lam)
    return FreeCumulantSequence(tuple(q for _ in range(order)))


def semicircle_cumulants(order: int) -> FreeCumulantSequence:
    return FreeCumulantSequence(tuple(Fraction(int(n == 2)) for n in range(1, order + 1)))
