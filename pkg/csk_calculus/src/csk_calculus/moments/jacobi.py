from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from csk_calculus.core.exceptions import InsufficientOrderError, NotAMomentSequenceError
from csk_calculus.series.polynomial import Polynomial
from csk_calculus.series.rational import format_rational
from csk_calculus.transforms.models import MomentSequence

log = logging.getLogger("csk_calculus.moments")


@dataclass(frozen=True)
class JacobiCoefficients:
    """x p_n = p_(n+1) + b_n p_n + c_(n-1) p_(n-1) for the monic orthogonal p_n."""

    b: tuple[Fraction, ...]
    c: tuple[Fraction, ...]

    @property
    def terminated(self) -> bool:
        return bool(self.c) and self.c[-1] == 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "b": [format_rational(v) for v in self.b],
            "c": [format_rational(v) for v in self.c],
            "terminated": self.terminated,
        }


def jacobi_from_moments(m: MomentSequence, *, depth: int | None = None) -> JacobiCoefficients:
    """
    Stieltjes procedure on the moment functional.

    b_n needs moments through m_(2n+1) and c_n through m_(2n+2). Stops early at
    c_n = 0 (finitely many atoms).
    """
    moments = m.moments
    n_max = m.order
    prev = Polynomial()
    cur = Polynomial.constant(1)
    h_cur = cur.integrate(moments)
    b: list[Fraction] = []
    c: list[Fraction] = []
    n = 0
    while 2 * n + 1 <= n_max and (depth is None or n < depth):
        xp = cur.mul_x()
        b_n = (xp * cur).integrate(moments) / h_cur
        b.append(b_n)
        if 2 * n + 2 > n_max:
            break
        nxt = xp - cur.scale(b_n)
        if c:
            nxt = nxt - prev.scale(c[-1])
        h_next = (nxt * nxt).integrate(moments)
        if h_next < 0:
            raise NotAMomentSequenceError(f"norm of p_{n + 1} is negative: {h_next}")
        c.append(h_next / h_cur)
        if h_next == 0:
            log.debug("jacobi terminated", extra={"at": n})
            break
        prev, cur, h_cur = cur, nxt, h_next
        n += 1
    return JacobiCoefficients(b=tuple(b), c=tuple(c))


def moments_from_jacobi(jac: JacobiCoefficients, order: int) -> MomentSequence:
    """
    Rebuild m_0..m_order as L(x^n), tracking x^n in the p-basis; L(p_k) = 0 for k >= 1.
    """
    cap = len(jac.b) - 1 if jac.terminated else None

    def b_at(k: int) -> Fraction:
        if k >= len(jac.b):
            raise InsufficientOrderError(f"m_{order} needs b_{k}, have {len(jac.b)} values")
        return jac.b[k]

    def c_at(k: int) -> Fraction:
        if k >= len(jac.c):
            raise InsufficientOrderError(f"m_{order} needs c_{k}, have {len(jac.c)} values")
        return jac.c[k]

    vec = [Fraction(1)]
    out = [Fraction(1)]
    for n in range(1, order + 1):
        limit = order - n if cap is None else min(order - n, cap)
        new = [Fraction(0)] * (limit + 1)
        for k, a in enumerate(vec):
            if a == 0:
                continue
            if k + 1 <= limit:
                new[k + 1] += a
            if k <= limit:
                new[k] += a * b_at(k)
            if k >= 1 and k - 1 <= limit:
                new[k - 1] += a * c_at(k - 1)
        vec = new
        out.append(vec[0])
    return MomentSequence(tuple(out))
