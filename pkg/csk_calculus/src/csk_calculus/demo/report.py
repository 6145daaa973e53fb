from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from csk_calculus.core.constants import (
    A001764_PREFIX,
    A098746_PREFIX,
    A106228_PREFIX,
    DEMO_MIN_ORDER,
    ORACLE_CAP_DEFAULT,
    SHIFTED_CUMULANT_DET,
)
from csk_calculus.core.exceptions import DemoCheckError, InsufficientOrderError
from csk_calculus.demo.sequences import (
    a098746_sequence,
    a106228_sequence,
    b3_series,
    fuss_sequence,
)
from csk_calculus.moments.hankel import hankel_minors
from csk_calculus.series.fps import (
    FormalPowerSeries,
    mul_z,
    series_div,
    series_mul,
    series_pow_rational,
    series_scale,
    series_sub,
)
from csk_calculus.series.rational import format_rational
from csk_calculus.transforms.cumulants import (
    free_cumulants_to_moments,
    moments_to_free_cumulants,
    moments_via_noncrossing,
    translate,
    translate_moments_binomial,
)
from csk_calculus.transforms.models import FreeCumulantSequence, MomentSequence
from csk_calculus.transforms.s_transform import fuss_catalan_power, moments_to_S
from csk_calculus.varfun.bijection import varfun_from_moments
from csk_calculus.varfun.membership import cubic_membership
from csk_calculus.varfun.models import Claim, VarianceFunction

log = logging.getLogger("csk_calculus.demo")


@dataclass(frozen=True)
class DemoReport:
    order: int
    fuss: list[int]
    s: list[int]
    kappa: list[int]
    det_witness: Fraction
    varfun: VarianceFunction
    identity_checks: dict[str, bool] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "order": self.order,
            "fuss": self.fuss,
            "s": self.s,
            "kappa": self.kappa,
            "det_witness": format_rational(self.det_witness),
            "varfun": self.varfun.series.to_list(),
            "identity_checks": dict(self.identity_checks),
        }


def _require(checks: dict[str, bool], name: str, ok: bool) -> None:
    checks[name] = bool(ok)
    if not ok:
        log.error("demo check failed", extra={"check": name})
        raise DemoCheckError(name)


def _as_ints(values: tuple[Fraction, ...], name: str, checks: dict[str, bool]) -> list[int]:
    _require(checks, f"{name}_integral", all(v.denominator == 1 for v in values))
    return [int(v) for v in values]


def run_demo(order: int = DEMO_MIN_ORDER) -> DemoReport:
    """Rebuild the Fuss-number example and verify every identity along the way."""
    if order < DEMO_MIN_ORDER:
        raise InsufficientOrderError(f"demo needs order >= {DEMO_MIN_ORDER}, got {order}")
    checks: dict[str, bool] = {}

    fuss = fuss_sequence(order)
    _require(checks, "a001764_prefix", tuple(fuss[: len(A001764_PREFIX)]) == A001764_PREFIX)
    b3 = b3_series(order)
    _require(checks, "b3_fixed_point", [int(c) for c in b3.coeffs] == fuss)
    fuss_law = fuss_catalan_power(1, 2, order)
    _require(checks, "fuss_from_s_transform", list(fuss_law.moments) == fuss)

    s = a098746_sequence(order)
    _require(checks, "a098746_prefix", tuple(s[: len(A098746_PREFIX)]) == A098746_PREFIX)
    one = FormalPowerSeries.constant(1, order)
    big_m = series_div(one, series_sub(one, mul_z(b3)))
    _require(checks, "a098746_series", list(big_m.coeffs) == s)

    mu = MomentSequence(tuple(s))
    m_minus_1 = series_sub(big_m, one)
    lhs = mul_z(series_mul(series_mul(big_m, big_m), m_minus_1))
    rhs = mul_z(mul_z(series_mul(series_mul(big_m, big_m), big_m))) + series_mul(
        series_mul(m_minus_1, m_minus_1), m_minus_1
    )
    _require(checks, "momgenfun", not any(series_sub(lhs, rhs).coeffs))

    r = a106228_sequence(order - 1)
    _require(checks, "a106228_prefix", tuple(r[: len(A106228_PREFIX)]) == A106228_PREFIX)
    kappa_mu = moments_to_free_cumulants(mu)
    kappa = _as_ints(kappa_mu.cumulants, "kappa", checks)
    _require(checks, "kappa_series", kappa == r)
    oracle_n = min(10, ORACLE_CAP_DEFAULT, order)
    _require(
        checks,
        "kappa_oracle",
        all(
            moments_via_noncrossing(FreeCumulantSequence(tuple(r)), n) == mu[n]
            for n in range(oracle_n + 1)
        ),
    )

    shifted = kappa_mu.cumulants[1:]
    det_report = hankel_minors(shifted, shift=0, size=6)
    det_witness = det_report.last_minor
    _require(checks, "det_witness", det_witness == SHIFTED_CUMULANT_DET)

    sqrt_part = series_pow_rational(
        FormalPowerSeries.from_polynomial([1, -2, -3], order - 1), Fraction(1, 2)
    )
    one_plus_z = FormalPowerSeries.from_polynomial([1, 1], order - 1)
    closed_s = series_div(
        series_scale(one_plus_z + sqrt_part, Fraction(1, 2)), one_plus_z
    )
    _require(checks, "s_transform", moments_to_S(mu).series == closed_s)

    kappa_nu = translate(kappa_mu, -1)
    nu = free_cumulants_to_moments(kappa_nu)
    _require(checks, "translation", nu == translate_moments_binomial(mu, -1))

    v = varfun_from_moments(nu)
    expected_v = FormalPowerSeries.from_polynomial([1, 2, 2, 1], v.order)
    _require(checks, "varfun", v.series == expected_v)

    cubic = cubic_membership(2, 2, 1)
    _require(
        checks,
        "cubic",
        cubic.in_v.claim is Claim.IN_V and cubic.in_v_infinity.claim is Claim.NOT_IN_V_INFINITY,
    )

    log.info("demo finished", extra={"order": order, "checks": len(checks)})
    return DemoReport(
        order=order,
        fuss=fuss,
        s=s,
        kappa=kappa,
        det_witness=det_witness,
        varfun=v,
        identity_checks=checks,
    )
