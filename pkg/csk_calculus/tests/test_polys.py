from __future__ import annotations

from fractions import Fraction

import pytest
from varfun_corpus import ADMISSIBLE_CUBICS, OTHER_POLYNOMIALS, QUADRATICS, corpus, cubic

from csk_calculus.core.exceptions import (
    InconsistentPairError,
    InsufficientMomentsError,
    InsufficientOrderError,
    NotNormalizedError,
    ParameterOutOfRangeError,
    ZeroLeadCoefficientError,
)
from csk_calculus.moments.hankel import VerdictKind
from csk_calculus.polys.families import (
    RecursionKind,
    RecursionSpec,
    associated_varfun,
    generating_function_identity_check,
    polynomials_from_recursion,
    polynomials_from_varfun,
)
from csk_calculus.polys.orthogonality import (
    d_orthogonality_check,
    gram_matrix,
    moment_pattern_check,
)
from csk_calculus.polys.reduction import polynomials_from_general_gf, reduce_general_gf
from csk_calculus.series.fps import FormalPowerSeries
from csk_calculus.series.polynomial import Polynomial
from csk_calculus.varfun.bijection import moments_from_varfun
from csk_calculus.varfun.models import VarianceFunction

F = Fraction


def _p(*coeffs: object) -> Polynomial:
    return Polynomial(tuple(coeffs))


def _v(coeffs: list[object], order: int) -> VarianceFunction:
    return VarianceFunction.from_coefficients(coeffs, order)


def test_constant_varfun_family() -> None:
    fam = polynomials_from_varfun(_v([1], 4), 4)
    assert fam.polys[:4] == (_p(1), _p(0, 1), _p(-1, 0, 1), _p(0, -2, 0, 1))
    assert fam.order == 4


def test_cubic_family_second_polynomial() -> None:
    fam = polynomials_from_varfun(_v([1, 2, 2, 1], 3), 3)
    assert fam.polys[2] == _p(-1, -2, 1)


def test_ccrd_recursion_with_zero_coefficients() -> None:
    spec = RecursionSpec.ccrd([0, 0])
    assert spec.general_coeffs() == (1, 0, -1)
    fam = polynomials_from_recursion(spec, 3)
    assert fam.polys[2] == _p(-1, 0, 1)
    assert fam.polys[3] == _p(0, -1, 0, 1)
    assert associated_varfun(spec, 4).series == FormalPowerSeries.from_polynomial([1, 0, -1], 4)
    assert spec.to_dict() == {"kind": "CCRD", "coeffs": ["0", "0"]}


def test_general_recursion_matches_varfun_family() -> None:
    spec = RecursionSpec.general([1, 2, 2, 1])
    assert spec.kind is RecursionKind.GENERAL
    assert polynomials_from_recursion(spec, 6).polys == polynomials_from_varfun(_v([1, 2, 2, 1], 6), 6).polys


def test_scaled_leading_coefficient() -> None:
    fam = polynomials_from_recursion(RecursionSpec.general([2]), 2)
    assert fam.polys[1] == _p(0, F(1, 2))
    assert fam.polys[2] == _p(F(-1, 2), 0, F(1, 4))


def test_recursion_rejects_zero_lead() -> None:
    with pytest.raises(ZeroLeadCoefficientError):
        polynomials_from_recursion(RecursionSpec.general([0, 1]), 3)
    with pytest.raises(InsufficientOrderError):
        polynomials_from_varfun(_v([1, 1], 2), 5)


def test_generating_function_identity_over_corpus() -> None:
    for name, v in corpus(10):
        fam = polynomials_from_varfun(v, 10)
        assert generating_function_identity_check(fam, v, 10), name


def test_generating_function_identity_detects_mismatch() -> None:
    fam = polynomials_from_varfun(_v([1], 6), 6)
    assert not generating_function_identity_check(fam, _v([1, 1], 6), 6)
    with pytest.raises(InsufficientOrderError):
        generating_function_identity_check(fam, _v([1], 6), 7)


@pytest.mark.parametrize("coeffs", [[1], [1, 1]])
def test_gram_matrix_is_identity_for_unit_jacobi_laws(coeffs: list[object]) -> None:
    v = _v(coeffs, 8)
    gram = gram_matrix(polynomials_from_varfun(v, 4), moments_from_varfun(v, 8))
    assert gram.entries.shape == (5, 5)
    assert gram.to_dict()["entries"][1] == ["0", "1", "0", "0", "0"]
    for n in range(5):
        for k in range(5):
            assert gram[n, k] == (1 if n == k else 0)
    with pytest.raises(InsufficientMomentsError):
        gram_matrix(polynomials_from_varfun(v, 4), moments_from_varfun(v, 7))


@pytest.mark.parametrize("name", sorted(ADMISSIBLE_CUBICS))
def test_cubics_are_two_orthogonal(name: str) -> None:
    report = d_orthogonality_check(cubic(name, 20), 2, 10)
    assert report.pattern_ok
    assert report.violations == ()
    assert report.hankel_evidence.verdict.kind is not VerdictKind.REFUTED


@pytest.mark.parametrize("name", sorted(ADMISSIBLE_CUBICS))
def test_cubics_fail_ordinary_orthogonality_at_p3_p2(name: str) -> None:
    report = d_orthogonality_check(cubic(name, 20), 1, 10)
    assert not report.pattern_ok
    first = report.violations[0]
    assert (first.n, first.k) == (3, 2)
    assert first.value == ADMISSIBLE_CUBICS[name][3]


@pytest.mark.parametrize("name", ["quartic_upper", "quartic_lower"])
def test_quartics_are_three_orthogonal_but_not_two(name: str) -> None:
    v = _v(OTHER_POLYNOMIALS[name], 20)
    assert d_orthogonality_check(v, 3, 10).pattern_ok
    report = d_orthogonality_check(v, 2, 10)
    assert not report.pattern_ok
    first = report.violations[0]
    assert (first.n, first.k) == (4, 2)
    assert first.value != 0


def test_quartic_first_violation_value() -> None:
    report = d_orthogonality_check(_v([1, 0, 0, 0, F(1, 4)], 20), 2, 10)
    assert report.violations[0].value == F(1, 4)


@pytest.mark.parametrize("name", sorted(QUADRATICS))
def test_quadratics_are_orthogonal(name: str) -> None:
    report = d_orthogonality_check(_v(QUADRATICS[name], 18), 1, 10)
    assert report.pattern_ok, report.violations[:1]


def test_two_atom_law_is_flagged_degenerate() -> None:
    report = d_orthogonality_check(_v([1, 0, -1], 10), 1, 6)
    assert report.pattern_ok
    assert report.degenerate
    assert report.to_dict()["degenerate"] is True


def test_d_orthogonality_preconditions() -> None:
    with pytest.raises(ParameterOutOfRangeError):
        d_orthogonality_check(_v([1], 20), 0, 10)
    with pytest.raises(ParameterOutOfRangeError):
        d_orthogonality_check(_v([1], 20), 3, 5)
    with pytest.raises(NotNormalizedError):
        d_orthogonality_check(_v([2], 20), 1, 10)


@pytest.mark.parametrize("name", sorted(ADMISSIBLE_CUBICS))
def test_moment_pattern_of_cubics(name: str) -> None:
    v = cubic(name, 14)
    assert moment_pattern_check(v, 2, 12, k_max=3) == ()
    first = moment_pattern_check(v, 1, 12, k_max=3)[0]
    assert (first.n, first.k, first.value) == (3, 2, ADMISSIBLE_CUBICS[name][3])


def _gf_pair(t: Fraction, order: int) -> tuple[FormalPowerSeries, FormalPowerSeries]:
    # V = 1 + m gives M(z) = V(tz)/t = 1/t + z.
    m_series = FormalPowerSeries.from_polynomial([1 / t, 1], order)
    n_series = FormalPowerSeries.from_polynomial([1 / t, 1, t], order)
    return m_series, n_series


@pytest.mark.parametrize("t", [F(1), F(2), F(1, 3)])
def test_general_generating_function_reduces_to_varfun_form(t: Fraction) -> None:
    moments = moments_from_varfun(_v([1, 1], 8), 8)
    m_series, n_series = _gf_pair(t, 6)
    reduction = reduce_general_gf(m_series, n_series, moments)
    assert reduction.t == t
    assert reduction.varfun.series == FormalPowerSeries.from_polynomial([1, 1], 6)
    assert reduction.order_checked == 6

    ts = polynomials_from_general_gf(m_series, n_series, 6).polys
    ps = polynomials_from_varfun(reduction.varfun, 6).polys
    for n in range(7):
        assert ts[n] == ps[n].scale(t**n)


def test_general_generating_function_first_terms() -> None:
    m_series, n_series = _gf_pair(F(2), 3)
    ts = polynomials_from_general_gf(m_series, n_series, 3).polys
    assert ts[0] == _p(1)
    assert ts[1] == _p(0, 2)


def test_general_generating_function_rejections() -> None:
    moments = moments_from_varfun(_v([1, 1], 8), 8)
    m_series, n_series = _gf_pair(F(2), 6)
    with pytest.raises(InconsistentPairError):
        reduce_general_gf(m_series, FormalPowerSeries.from_polynomial([1, 1, 2], 6), moments)
    with pytest.raises(InconsistentPairError):
        reduce_general_gf(m_series, FormalPowerSeries.from_polynomial([F(1, 2), 1, 3], 6), moments)
    with pytest.raises(InconsistentPairError):
        bad_m = FormalPowerSeries.from_polynomial([F(1, 2), 2], 6)
        reduce_general_gf(bad_m, FormalPowerSeries.from_polynomial([F(1, 2), 2, 2], 6), moments)
    with pytest.raises(InsufficientOrderError):
        polynomials_from_general_gf(m_series, n_series, 7)
