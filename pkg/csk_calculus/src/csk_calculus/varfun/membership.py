from __future__ import annotations

import enum
import logging
from typing import Any, Sequence

from csk_calculus.core.exceptions import (
    NonUnitS0Error,
    NotNormalizedError,
    ParameterOutOfRangeError,
)
from csk_calculus.moments.hankel import VerdictKind, hankel_minors
from csk_calculus.series.fps import (
    FormalPowerSeries,
    series_add,
    series_div,
    series_mul,
    series_pow_rational,
    series_truncate,
)
from csk_calculus.series.rational import parse_rational
from csk_calculus.transforms.models import STransformSeries
from csk_calculus.varfun.bijection import moments_from_varfun, omega_moments_from_varfun
from csk_calculus.varfun.models import (
    Claim,
    CubicMembership,
    MembershipVerdict,
    VarClass,
    VarianceFunction,
    criterion_values,
)

log = logging.getLogger("csk_calculus.varfun")


class Target(str, enum.Enum):
    V = "V"
    V_INFINITY = "V_INFINITY"


def cubic_membership(a: Any, b: Any, c: Any) -> CubicMembership:
    """
    Closed-form membership of 1 + a m + b m^2 + c m^3.

    In V iff (b+1)^3 >= 27 c^2; in V-infinity iff b^3 >= 27 c^2. ``a`` plays no role.
    """
    parse_rational(a)
    bq = parse_rational(b)
    cq = parse_rational(c)
    rhs = 27 * cq**2
    lhs_v = (bq + 1) ** 3
    lhs_inf = bq**3
    in_v = MembershipVerdict(
        claim=Claim.IN_V if lhs_v >= rhs else Claim.NOT_IN_V,
        order_checked=3,
        witness=criterion_values(lhs=lhs_v, rhs=rhs),
    )
    in_inf = MembershipVerdict(
        claim=Claim.IN_V_INFINITY if lhs_inf >= rhs else Claim.NOT_IN_V_INFINITY,
        order_checked=3,
        witness=criterion_values(lhs=lhs_inf, rhs=rhs),
    )
    return CubicMembership(in_v=in_v, in_v_infinity=in_inf)


def quartic_axis_membership(a: Any) -> MembershipVerdict:
    """1 + a m^4 is in V iff -1 <= 12a <= 3."""
    twelve_a = 12 * parse_rational(a)
    ok = -1 <= twelve_a <= 3
    return MembershipVerdict(
        claim=Claim.IN_V if ok else Claim.NOT_IN_V,
        order_checked=4,
        witness=criterion_values(twelve_a=twelve_a),
    )


def membership_evidence(v: VarianceFunction, order: int, target: Target | str) -> MembershipVerdict:
    """
    Finite-order Hankel evidence; never certifies membership.

    Target V checks the moments of the law with variance function V through
    m_order. Target V-infinity reads V - 1 as the R-transform of a law omega
    and checks omega's moments instead.
    """
    tgt = Target(target)
    if not v.normalized:
        raise NotNormalizedError(f"V(0) = {v.series.coeffs[0]}, expected 1")
    if tgt is Target.V:
        seq = moments_from_varfun(v, order)
    else:
        seq = omega_moments_from_varfun(v, order)
    report = hankel_minors(seq.moments, shift=0, size=order // 2 + 1)
    claim = (
        Claim.EVIDENCE_REFUTED
        if report.verdict.kind is VerdictKind.REFUTED
        else Claim.EVIDENCE_CONSISTENT
    )
    log.info(
        "membership evidence",
        extra={"target": tgt.value, "order": order, "claim": claim.value},
    )
    return MembershipVerdict(claim=claim, order_checked=order, witness=report)


def product_form_varfun(
    a: Any,
    b: Any,
    c: Any,
    factors: Sequence[tuple[Any, Any]],
    order: int,
) -> VarianceFunction:
    """
    a z + b z^2 + (1 + c z) prod (1 + b_j z)^(p_j).

    Class annotation: V-infinity when b >= 0, V when b >= -1, nothing otherwise.
    """
    aq, bq, cq = parse_rational(a), parse_rational(b), parse_rational(c)
    if cq <= 0:
        raise ParameterOutOfRangeError("c must be positive")
    acc = FormalPowerSeries.from_polynomial([1, cq], order)
    for raw_b, raw_p in factors:
        bj, pj = parse_rational(raw_b), parse_rational(raw_p)
        if bj <= 0 or pj <= 0:
            raise ParameterOutOfRangeError("factor parameters b_j, p_j must be positive")
        if max(pj, cq / bj) < 1:
            raise ParameterOutOfRangeError(f"factor ({bj}, {pj}) needs max(p_j, c/b_j) >= 1")
        acc = series_mul(acc, series_pow_rational(FormalPowerSeries.from_polynomial([1, bj], order), pj))
    series = series_add(acc, FormalPowerSeries.from_polynomial([0, aq, bq], order))

    if bq >= 0:
        var_class, provenance = VarClass.V_INFINITY, "product-form, b >= 0"
    elif bq >= -1:
        var_class, provenance = VarClass.V, "product-form, b >= -1"
    else:
        var_class, provenance = None, f"product-form, b < -1: {Claim.INCONCLUSIVE.value}"
    return VarianceFunction(series, var_class=var_class, provenance=provenance)


def varfun_from_S(s: STransformSeries, order: int) -> VarianceFunction:
    """V(z) = (1 + z)/S(z) for an S-transform with S(0) = 1."""
    if s.series.coeffs[0] != 1:
        raise NonUnitS0Error(f"S(0) = {s.series.coeffs[0]}, expected 1")
    n = min(order, s.order)
    v = series_div(FormalPowerSeries.from_polynomial([1, 1], n), series_truncate(s.series, n))
    return VarianceFunction(v, var_class=VarClass.V_INFINITY, provenance="(1+z)/S")
