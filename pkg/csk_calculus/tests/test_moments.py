from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from csk_calculus.core.exceptions import (
    InsufficientOrderError,
    InsufficientSequenceError,
    NotAMomentSequenceError,
)
from csk_calculus.moments.hankel import PsdVerdict, VerdictKind, hankel_minors, psd_verdict
from csk_calculus.moments.jacobi import (
    JacobiCoefficients,
    jacobi_from_moments,
    moments_from_jacobi,
)
from csk_calculus.moments.linalg import bareiss_determinant, rational_matrix
from csk_calculus.transforms.cumulants import translate_moments_binomial
from csk_calculus.transforms.models import MomentSequence

F = Fraction

SHIFTED_FUSS_CUMULANTS = (1, 2, 6, 21, 80, 322, 1347, 5798, 25512, 114236, 518848)


def _centered_catalan(order: int) -> MomentSequence:
    catalan = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]
    return translate_moments_binomial(MomentSequence.of(catalan[: order + 1]), -1)


@pytest.mark.parametrize(
    "rows,expected",
    [
        ([[2, 1], [1, 3]], F(5)),
        ([[F(1, 2), F(1, 3)], [F(1, 4), F(1, 5)]], F(1, 60)),
        ([[0, 1], [1, 0]], F(-1)),
        ([[1, 2], [2, 4]], F(0)),
        ([[1, 2, 3], [4, 5, 6], [7, 8, 10]], F(-3)),
        ([[0, 2, 1], [3, 0, F(1, 2)], [1, 1, 1]], F(-2)),
    ],
)
def test_bareiss_determinant(rows: list[list[object]], expected: Fraction) -> None:
    assert bareiss_determinant(rational_matrix(rows)) == expected


def test_rational_matrix_is_square_object_array() -> None:
    mat = rational_matrix([["1/2", 1], [0, 3]])
    assert mat.dtype == np.dtype(object)
    assert mat[0, 0] == F(1, 2)
    with pytest.raises(ValueError):
        rational_matrix([[1, 2, 3], [4, 5, 6]])


@pytest.mark.parametrize(
    "c,kind,index",
    [
        (0, VerdictKind.POSITIVE, None),
        (1, VerdictKind.DEGENERATE, 3),
        (2, VerdictKind.REFUTED, 3),
        (-3, VerdictKind.REFUTED, 3),
    ],
)
def test_hankel_minor_of_cubic_moments_is_one_minus_c_squared(
    c: int, kind: VerdictKind, index: int | None
) -> None:
    report = hankel_minors([1, 0, 1, 0, 2, c, 5], size=4)
    assert report.minors == (1, 1, 1, 1 - c * c)
    assert report.verdict.kind is kind
    assert report.verdict.index == index


def test_shifted_cumulant_hankel_determinant() -> None:
    report = hankel_minors(SHIFTED_FUSS_CUMULANTS, size=6)
    assert report.last_minor == -3374
    assert report.verdict == PsdVerdict(VerdictKind.REFUTED, index=5, value=F(-3374))
    assert report.to_dict()["verdict"] == {"kind": "REFUTED", "index": 5, "value": "-3374"}


def test_shift_reads_later_terms() -> None:
    report = hankel_minors([5, 1, 0, 1, 0, 2], shift=1, size=3)
    assert report.minors == (1, 1, 1)


@pytest.mark.parametrize(
    "minors,expected",
    [
        ((1, 1, -3), PsdVerdict(VerdictKind.REFUTED, index=2, value=F(-3))),
        ((1, 0, -1), PsdVerdict(VerdictKind.DEGENERATE, index=1)),
        ((1, 2, 3), PsdVerdict(VerdictKind.POSITIVE)),
        ((-1,), PsdVerdict(VerdictKind.REFUTED, index=0, value=F(-1))),
    ],
)
def test_psd_verdict_rules(minors: tuple[int, ...], expected: PsdVerdict) -> None:
    assert psd_verdict([F(d) for d in minors]) == expected


def test_point_mass_is_degenerate_after_first_minor() -> None:
    report = hankel_minors([1, 1, 1, 1, 1], size=3)
    assert report.minors == (1, 0, 0)
    assert psd_verdict(report) == PsdVerdict(VerdictKind.DEGENERATE, index=1)


def test_hankel_needs_enough_terms() -> None:
    with pytest.raises(InsufficientSequenceError):
        hankel_minors([1, 0, 1], size=3)
    with pytest.raises(InsufficientSequenceError):
        hankel_minors([1, 0, 1], size=0)


def test_jacobi_of_two_atoms_terminates() -> None:
    jac = jacobi_from_moments(MomentSequence.of([1, 0, 1, 0, 1]))
    assert jac == JacobiCoefficients(b=(F(0), F(0)), c=(F(1), F(0)))
    assert jac.terminated
    assert moments_from_jacobi(jac, 8).moments == (1, 0, 1, 0, 1, 0, 1, 0, 1)


def test_jacobi_of_centered_catalan_law() -> None:
    m = _centered_catalan(6)
    assert m.moments == (1, 0, 1, 1, 3, 6, 15)
    jac = jacobi_from_moments(m)
    assert jac.b == (0, 1, 1)
    assert jac.c == (1, 1, 1)
    assert not jac.terminated
    assert jacobi_from_moments(m, depth=2).b == (0, 1)


def test_moments_rebuilt_from_jacobi_coefficients() -> None:
    m = _centered_catalan(8)
    assert moments_from_jacobi(jacobi_from_moments(m), 8) == m
    with pytest.raises(InsufficientOrderError):
        moments_from_jacobi(jacobi_from_moments(m, depth=1), 8)


def test_negative_norm_is_not_a_moment_sequence() -> None:
    with pytest.raises(NotAMomentSequenceError):
        jacobi_from_moments(MomentSequence.of([1, 0, 1, 0, 2, 2, 5]))
