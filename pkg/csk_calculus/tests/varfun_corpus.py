from __future__ import annotations

from fractions import Fraction

from csk_calculus.series.fps import FormalPowerSeries, series_div, series_mul, series_pow_rational
from csk_calculus.varfun.models import VarianceFunction

F = Fraction

# 1 + a m + b m^2 + c m^3 with (b+1)^3 >= 27 c^2 and c != 0.
ADMISSIBLE_CUBICS: dict[str, list[Fraction]] = {
    "shifted_fuss": [F(1), F(2), F(2), F(1)],
    "cube_of_linear": [F(1), F(3), F(3), F(1)],
    "small_cubic": [F(1), F(0), F(0), F(1, 6)],
    "balanced_cubic": [F(1), F(1), F(1), F(1, 5)],
    "boundary_cubic": [F(1), F(0), F(2), F(1)],
    "negative_linear_cubic": [F(1), F(-1), F(1), F(1, 4)],
    "tiny_cubic": [F(1), F(0), F(1, 2), F(1, 10)],
}

QUADRATICS: dict[str, list[Fraction]] = {
    "semicircle": [F(1)],
    "free_poisson": [F(1), F(1)],
    "reflected_poisson": [F(1), F(-1)],
    "steep_linear": [F(1), F(2)],
    "half_linear": [F(1), F(1, 2)],
    "pure_square": [F(1), F(0), F(1)],
    "full_quadratic": [F(1), F(1), F(1)],
    "two_atoms": [F(1), F(0), F(-1)],
    "mixed_quadratic": [F(1), F(2), F(1, 2)],
    "negative_quadratic": [F(1), F(-3), F(2)],
}

OTHER_POLYNOMIALS: dict[str, list[Fraction]] = {
    "inadmissible_cubic": [F(1), F(0), F(0), F(2)],
    "quartic_upper": [F(1), F(0), F(0), F(0), F(1, 4)],
    "quartic_lower": [F(1), F(0), F(0), F(0), F(-1, 12)],
}


def polynomial_corpus(order: int) -> list[tuple[str, VarianceFunction]]:
    table = {**QUADRATICS, **ADMISSIBLE_CUBICS, **OTHER_POLYNOMIALS}
    return [(name, VarianceFunction.from_coefficients(c, order)) for name, c in table.items()]


def series_corpus(order: int) -> list[tuple[str, VarianceFunction]]:
    one_plus_z = FormalPowerSeries.from_polynomial([1, 1], order)
    one_plus_2z = FormalPowerSeries.from_polynomial([1, 2], order)
    product = series_mul(
        series_pow_rational(one_plus_z, F(3, 2)), series_pow_rational(one_plus_2z, F(3, 2))
    )
    inverse = series_div(FormalPowerSeries.constant(1, order), one_plus_z)
    return [
        ("three_halves_product", VarianceFunction(product)),
        ("inverse_linear", VarianceFunction(inverse)),
    ]


def corpus(order: int) -> list[tuple[str, VarianceFunction]]:
    return polynomial_corpus(order) + series_corpus(order)


def cubic(name: str, order: int) -> VarianceFunction:
    return VarianceFunction.from_coefficients(ADMISSIBLE_CUBICS[name], order)
