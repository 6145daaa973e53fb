from __future__ import annotations

import enum
import logging
from typing import Any

from csk_calculus.core.exceptions import (
    NotNormalizedError,
    ParameterOutOfRangeError,
    UsageError,
)
from csk_calculus.series.fps import (
    FormalPowerSeries,
    series_add,
    series_reflect,
    series_scale,
    series_sub,
    series_substitute_scale,
)
from csk_calculus.series.rational import parse_rational
from csk_calculus.varfun.models import VarClass, VarianceFunction

log = logging.getLogger("csk_calculus.varfun")


class VarfunOp(str, enum.Enum):
    SCALE_MEAN = "SCALE_MEAN"
    ADD_LINEAR = "ADD_LINEAR"
    SUM_MINUS_ONE = "SUM_MINUS_ONE"
    SCALAR_COMBINE = "SCALAR_COMBINE"
    SUB_SQUARE = "SUB_SQUARE"
    ADD_SQUARE = "ADD_SQUARE"
    REFLECT = "REFLECT"


_NEEDS_PARAM = {VarfunOp.SCALE_MEAN, VarfunOp.ADD_LINEAR, VarfunOp.SCALAR_COMBINE}


def apply_varfun_op(
    op: VarfunOp | str,
    v1: VarianceFunction,
    v2: VarianceFunction | None = None,
    param: Any = None,
) -> VarianceFunction:
    """
    Apply one of the class-preserving operations on variance functions.

    Input classes are whatever the caller asserted on ``v1``/``v2``; the result
    carries the class those assertions imply, or none when they imply nothing.
    """
    tag = VarfunOp(op)
    if not v1.normalized or (v2 is not None and not v2.normalized):
        raise NotNormalizedError("operations act on variance functions with V(0) = 1")
    if tag in _NEEDS_PARAM and param is None:
        raise UsageError(f"{tag.value} needs a parameter")
    c = parse_rational(param) if param is not None else None
    series = v1.series
    order = series.order
    cls = v1.var_class

    if tag is VarfunOp.SCALE_MEAN:
        if c < 1:
            raise ParameterOutOfRangeError("SCALE_MEAN needs c >= 1")
        out = series_substitute_scale(series, 1 / c)
        out_cls = cls
    elif tag is VarfunOp.ADD_LINEAR:
        out = series_add(series, FormalPowerSeries.from_polynomial([0, c], order))
        out_cls = cls
    elif tag is VarfunOp.SUM_MINUS_ONE:
        if v2 is None:
            raise UsageError("SUM_MINUS_ONE needs two variance functions")
        out = series_sub(series_add(series, v2.series), FormalPowerSeries.constant(1, order))
        both = cls is VarClass.V_INFINITY and v2.var_class is VarClass.V_INFINITY
        out_cls = VarClass.V_INFINITY if both else None
    elif tag is VarfunOp.SCALAR_COMBINE:
        if c < 1:
            raise ParameterOutOfRangeError("SCALAR_COMBINE needs c >= 1")
        out = series_add(series_scale(series, c), FormalPowerSeries.constant(1 - c, order))
        out_cls = VarClass.V_INFINITY if cls is VarClass.V_INFINITY else None
    elif tag is VarfunOp.SUB_SQUARE:
        out = series_sub(series, FormalPowerSeries.from_polynomial([0, 0, 1], order))
        out_cls = VarClass.V if cls is VarClass.V_INFINITY else None
    elif tag is VarfunOp.ADD_SQUARE:
        out = series_add(series, FormalPowerSeries.from_polynomial([0, 0, 1], order))
        out_cls = VarClass.V_INFINITY if cls is not None else None
    else:
        out = series_reflect(series)
        out_cls = cls

    provenance = f"{tag.value}" + (f"(c={c})" if c is not None else "")
    log.debug("varfun op", extra={"op": tag.value, "class": out_cls.value if out_cls else None})
    return VarianceFunction(out, var_class=out_cls, provenance=provenance if out_cls else None)
