from __future__ import annotations

from fractions import Fraction

import pytest
from varfun_corpus import corpus

from csk_calculus.core.exceptions import (
    InsufficientOrderError,
    InvalidSequenceError,
    OracleCapExceededError,
    OrderMismatchError,
    ParameterOutOfRangeError,
    ZeroDilationError,
    ZeroMeanError,
)
from csk_calculus.series.fps import FormalPowerSeries
from csk_calculus.transforms.cumulants import (
    dilate,
    dilate_cumulants,
    free_additive_convolve,
    free_convolution_power,
    free_cumulants_to_moments,
    marchenko_pastur_cumulants,
    moments_to_free_cumulants,
    moments_via_noncrossing,
    semicircle_cumulants,
    translate,
    translate_moments_binomial,
)
from csk_calculus.transforms.models import FreeCumulantSequence, MomentSequence, STransformSeries
from csk_calculus.transforms.s_transform import (
    free_multiplicative_convolve,
    fuss_catalan_power,
    marchenko_pastur_S,
    moments_from_S,
    moments_to_S,
    point_mass_S,
)
from csk_calculus.varfun.bijection import cumulants_from_varfun

F = Fraction

CATALAN = (1, 1, 2, 5, 14, 42, 132, 429, 1430)
FUSS_3 = (1, 1, 3, 12, 55, 273, 1428)


def test_moment_sequence_requires_unit_mass() -> None:
    with pytest.raises(InvalidSequenceError):
        MomentSequence.of([2, 0, 1])
    m = MomentSequence.of([1, "1/2", 3])
    assert m.order == 2
    assert m.to_dict() == {"order": 2, "moments": ["1", "1/2", "3"]}


def test_catalan_moments_have_unit_cumulants() -> None:
    kappa = moments_to_free_cumulants(MomentSequence.of(CATALAN))
    assert kappa.cumulants == (F(1),) * (len(CATALAN) - 1)


def test_semicircle_moments_and_cumulants() -> None:
    m = free_cumulants_to_moments(semicircle_cumulants(6))
    assert m.moments == (1, 0, 1, 0, 2, 0, 5)
    assert moments_to_free_cumulants(m) == semicircle_cumulants(6)


@pytest.mark.parametrize(
    "moments",
    [
        (1, F(1, 2), 3, -2, F(7, 3), 5, 0, 11),
        (1, 0, 1, 0, 2, 0, 5),
        (1, -3, 10, F(-1, 9), 4),
    ],
)
def test_moment_cumulant_round_trip(moments: tuple[object, ...]) -> None:
    m = MomentSequence.of(moments)
    k = moments_to_free_cumulants(m)
    assert k.order == m.order
    assert free_cumulants_to_moments(k) == m


def test_series_conversion_matches_noncrossing_oracle_over_corpus() -> None:
    for name, v in corpus(10):
        k = cumulants_from_varfun(v, 10)
        m = free_cumulants_to_moments(k)
        for n in range(11):
            assert moments_via_noncrossing(k, n) == m[n], (name, n)


def test_oracle_guards() -> None:
    k = FreeCumulantSequence.of([1] * 13)
    with pytest.raises(OracleCapExceededError):
        moments_via_noncrossing(k, 13)
    with pytest.raises(OracleCapExceededError):
        moments_via_noncrossing(k, 5, cap=4)
    assert moments_via_noncrossing(k, 8) == CATALAN[8]
    with pytest.raises(InsufficientOrderError):
        moments_via_noncrossing(FreeCumulantSequence.of([0, 1]), 3)
    with pytest.raises(ParameterOutOfRangeError):
        moments_via_noncrossing(k, -1)


@pytest.mark.parametrize("t", [2, F(-1, 3), F(5, 2)])
def test_dilation_scales_cumulants(t: Fraction) -> None:
    m = MomentSequence.of((1, 1, 3, -1, F(2, 5), 7, 4))
    lhs = moments_to_free_cumulants(dilate(m, t))
    rhs = dilate_cumulants(moments_to_free_cumulants(m), t)
    assert lhs == rhs
    with pytest.raises(ZeroDilationError):
        dilate(m, 0)


def test_additive_convolution_and_powers() -> None:
    s = semicircle_cumulants(4)
    both = free_additive_convolve(s, s)
    assert both.cumulants == (0, 2, 0, 0)
    assert free_convolution_power(s, 2) == both
    with pytest.raises(OrderMismatchError):
        free_additive_convolve(s, semicircle_cumulants(5))

    half = free_convolution_power(marchenko_pastur_cumulants(1, 3), F(1, 2))
    assert half.formal
    assert half.to_dict()["formal"] is True
    assert not free_convolution_power(s, 3).formal


@pytest.mark.parametrize("s", [-1, F(1, 2), 3])
def test_translation_matches_binomial_shift(s: Fraction) -> None:
    m = MomentSequence.of(CATALAN)
    k = moments_to_free_cumulants(m)
    shifted = free_cumulants_to_moments(translate(k, s))
    assert shifted == translate_moments_binomial(m, s)
    assert translate(k, s).cumulants[1:] == k.cumulants[1:]


@pytest.mark.parametrize("lam", [1, 2, F(1, 3)])
def test_marchenko_pastur_cumulants_follow_from_s_transform(lam: Fraction) -> None:
    m = moments_from_S(marchenko_pastur_S(lam, 7))
    assert m.order == 8
    assert moments_to_free_cumulants(m) == marchenko_pastur_cumulants(lam, 8)


def test_s_transform_of_catalan_law() -> None:
    s = moments_to_S(MomentSequence.of(CATALAN))
    assert s.order == len(CATALAN) - 2
    expected = [F((-1) ** j) for j in range(s.order + 1)]
    assert list(s.series.coeffs) == expected
    assert moments_from_S(s) == MomentSequence.of(CATALAN)


def test_s_transform_errors_and_point_mass() -> None:
    with pytest.raises(ZeroMeanError):
        moments_to_S(MomentSequence.of([1, 0, 1]))
    with pytest.raises(InsufficientOrderError):
        moments_to_S(MomentSequence.of([1]))
    assert moments_to_S(MomentSequence.of([1, 2, 4, 8, 16])).series.coeffs == (F(1, 2), F(0), F(0), F(0))
    assert moments_from_S(point_mass_S(3, 4)).moments == (1, 3, 9, 27, 81, 243)
    with pytest.raises(ZeroMeanError):
        point_mass_S(0, 3)


def test_multiplicative_convolution_of_two_catalan_laws() -> None:
    s = marchenko_pastur_S(1, 5)
    assert free_multiplicative_convolve(s, s).moments == FUSS_3


def test_fuss_catalan_power() -> None:
    assert fuss_catalan_power(1, 2, 6).moments == FUSS_3
    assert fuss_catalan_power(1, 1, 8).moments == CATALAN
    assert fuss_catalan_power(F(1, 2), F(1, 2), 3).order == 3


@pytest.mark.parametrize("b,p", [(0, 1), (1, 0), (2, F(1, 2)), (-1, 2)])
def test_fuss_catalan_power_parameter_range(b: object, p: object) -> None:
    with pytest.raises(ParameterOutOfRangeError):
        fuss_catalan_power(b, p, 4)


def test_s_series_payload_shape() -> None:
    s = STransformSeries(FormalPowerSeries.from_polynomial([1, -1], 2))
    assert s.to_dict() == {"order": 2, "s_series": ["1", "-1", "0"]}
