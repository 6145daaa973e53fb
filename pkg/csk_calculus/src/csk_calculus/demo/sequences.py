from __future__ import annotations

from fractions import Fraction
from math import comb

from csk_calculus.core.exceptions import ClosedFormMismatchError
from csk_calculus.series.fps import FormalPowerSeries, mul_z, series_mul, series_sub


def fuss_sequence(n_max: int) -> list[int]:
    """Fuss numbers of order 3: C(3n+1, n)/(3n+1), n = 0..n_max."""
    return [comb(3 * n + 1, n) // (3 * n + 1) for n in range(n_max + 1)]


def b3_series(order: int) -> FormalPowerSeries:
    """B = 1 + z B^3 solved by fixed-point iteration; each pass fixes one more coefficient."""
    one = FormalPowerSeries.constant(1, order)
    b = one
    for _ in range(order + 1):
        b = one + mul_z(series_mul(series_mul(b, b), b))
    return b


def a098746_closed_form(n: int) -> Fraction:
    return sum(
        (Fraction(n - i, n + 2 * i) * comb(n + 2 * i, i) for i in range(n + 1)),
        Fraction(0),
    )


def a098746_sequence(n_max: int) -> list[int]:
    """s(0) = 1, s(n) = sum fuss(i) s(n-1-i); cross-checked against the closed form."""
    fuss = fuss_sequence(n_max)
    s = [1]
    for n in range(1, n_max + 1):
        s.append(sum(fuss[i] * s[n - 1 - i] for i in range(n)))
    for n in range(1, n_max + 1):
        closed = a098746_closed_form(n)
        if closed != s[n]:
            raise ClosedFormMismatchError(f"s({n}) = {s[n]} but closed form gives {closed}")
    return s


def a106228_sequence(n_max: int) -> list[int]:
    """Coefficients r_0..r_n_max of r = 1 + z r (1 - r + r^2)."""
    one = FormalPowerSeries.constant(1, n_max)
    r = one
    for _ in range(n_max + 1):
        r2 = series_mul(r, r)
        r = one + mul_z(series_mul(r, one + series_sub(r2, r)))
    return [int(c) for c in r.coeffs[: n_max + 1]]

