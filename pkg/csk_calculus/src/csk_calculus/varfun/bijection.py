from __future__ import annotations

import logging
from fractions import Fraction

from csk_calculus.core.exceptions import (
    InsufficientOrderError,
    NotCenteredError,
    NotNormalizedError,
    NotUnitVarianceError,
)
from csk_calculus.series.fps import (
    FormalPowerSeries,
    div_z,
    mul_z,
    series_div,
    series_revert,
    series_truncate,
)
from csk_calculus.transforms.cumulants import (
    free_cumulants_to_moments,
    moments_to_free_cumulants,
)
from csk_calculus.transforms.models import FreeCumulantSequence, MomentSequence
from csk_calculus.varfun.models import VarianceFunction

log = logging.getLogger("csk_calculus.varfun")


def varfun_from_moments(m: MomentSequence) -> VarianceFunction:
    """
    Variance function of a centered variance-1 law.

    r(z) = sum kappa_(n+1) z^n has compositional inverse z/V(z). Moments
    through m_N give V through m^(N-2).
    """
    _check_centered(m)
    if m.moments[2] != 1:
        raise NotUnitVarianceError(f"variance is {m.moments[2]}, expected 1")
    return varfun_from_centered_moments(m)


def varfun_from_centered_moments(m: MomentSequence) -> VarianceFunction:
    """Same bijection for any positive variance; V(0) is the variance."""
    _check_centered(m)
    if m.moments[2] <= 0:
        raise NotUnitVarianceError(f"variance must be positive, got {m.moments[2]}")
    kappa = moments_to_free_cumulants(m)
    r = FormalPowerSeries((Fraction(0),) + kappa.cumulants[1:])
    g = series_revert(r)
    g_over_z = div_z(g)
    v = series_div(FormalPowerSeries.constant(1, g_over_z.order), g_over_z)
    log.debug("moments -> varfun", extra={"order": v.order})
    return VarianceFunction(v)


def cumulants_from_varfun(v: VarianceFunction, order: int) -> FreeCumulantSequence:
    """kappa_1..kappa_order with kappa_1 = 0, read off revert(z/V)."""
    if order < 1:
        raise InsufficientOrderError("order must be at least 1")
    if order == 1:
        return FreeCumulantSequence((Fraction(0),))
    need = order - 2
    if v.order < need:
        raise InsufficientOrderError(
            f"{order} cumulants need V through m^{need}, have order {v.order}"
        )
    series = series_truncate(v.series, need)
    g = mul_z(series_div(FormalPowerSeries.constant(1, need), series))
    r = series_revert(g)
    return FreeCumulantSequence((Fraction(0),) + r.coeffs[1:])


def moments_from_varfun(v: VarianceFunction, order: int) -> MomentSequence:
    if not v.normalized:
        raise NotNormalizedError(f"V(0) = {v.series.coeffs[0]}, expected 1")
    if order < 1:
        return MomentSequence((Fraction(1),))
    return free_cumulants_to_moments(cumulants_from_varfun(v, order))


def omega_moments_from_varfun(v: VarianceFunction, order: int) -> MomentSequence:
    """Moments of omega with V = 1 + R_omega: kappa_n(omega) is the m^n coefficient of V."""
    if not v.normalized:
        raise NotNormalizedError(f"V(0) = {v.series.coeffs[0]}, expected 1")
    if v.order < order:
        raise InsufficientOrderError(f"omega moments through {order} need V order {order}")
    return free_cumulants_to_moments(FreeCumulantSequence(v.series.coeffs[1 : order + 1]))


def _check_centered(m: MomentSequence) -> None:
    if m.order < 2:
        raise InsufficientOrderError("need moments through m_2")
    if m.moments[1] != 0:
        raise NotCenteredError(f"mean is {m.moments[1]}, expected 0")
