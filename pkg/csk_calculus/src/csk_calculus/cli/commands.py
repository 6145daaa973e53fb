from __future__ import annotations

import argparse
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from csk_calculus.cli.payloads import Payload
from csk_calculus.cli.render import render_json, render_text
from csk_calculus.core.config import AppConfig
from csk_calculus.core.constants import (
    APP_NAME,
    EXIT_DOMAIN_ERROR,
    EXIT_OK,
    EXIT_USAGE_ERROR,
)
from csk_calculus.core.exceptions import ConfigError, DomainError, UsageError
from csk_calculus.core.utils import safe_json_dumps
from csk_calculus.demo.report import run_demo
from csk_calculus.moments.hankel import hankel_minors
from csk_calculus.moments.jacobi import jacobi_from_moments, moments_from_jacobi
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
from csk_calculus.series.rational import format_rational, parse_rational, parse_rational_list
from csk_calculus.transforms.cumulants import (
    dilate,
    free_additive_convolve,
    free_convolution_power,
    free_cumulants_to_moments,
    marchenko_pastur_cumulants,
    moments_to_free_cumulants,
    moments_via_noncrossing,
    translate,
)
from csk_calculus.transforms.models import FreeCumulantSequence, MomentSequence, STransformSeries
from csk_calculus.transforms.s_transform import (
    free_multiplicative_convolve,
    fuss_catalan_power,
    moments_from_S,
    moments_to_S,
)
from csk_calculus.varfun.bijection import (
    moments_from_varfun,
    omega_moments_from_varfun,
    varfun_from_moments,
)
from csk_calculus.varfun.membership import (
    Target,
    cubic_membership,
    membership_evidence,
    product_form_varfun,
    quartic_axis_membership,
    varfun_from_S,
)
from csk_calculus.varfun.models import VarClass, VarianceFunction
from csk_calculus.varfun.operations import VarfunOp, apply_varfun_op

log = logging.getLogger("csk_calculus.cli")

SUBCOMMANDS = (
    "convert",
    "varfun",
    "check-cubic",
    "check-quartic",
    "evidence",
    "polys",
    "d-orth",
    "hankel",
    "jacobi",
    "gf-reduce",
    "demo",
)


@dataclass(frozen=True)
class CommandRequest:
    subcommand: str
    options: argparse.Namespace
    payload: Payload


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    output: str


Handler = Callable[[argparse.Namespace, Payload, AppConfig], Any]


# --- parser -----------------------------------------------------------------


def _common_flags() -> argparse.ArgumentParser:
    # SUPPRESS keeps a subcommand from overwriting the same flag given globally.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=argparse.SUPPRESS)
    common.add_argument("--format", choices=["json", "text"], default=argparse.SUPPRESS)
    common.add_argument("--input", type=str, default=argparse.SUPPRESS, help="JSON payload file, or - for stdin")
    return common


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog=APP_NAME)
    p.add_argument("--config", type=str, default=None, help="Path to config.yaml")
    p.add_argument("--log-level", type=str, default=None)
    p.add_argument("--order", type=int, default=None, help="Truncation order (default from config)")
    p.add_argument("--format", choices=["json", "text"], default=None)
    p.add_argument("--input", type=str, default=None, help="JSON payload file, or - for stdin")

    common = _common_flags()
    sub = p.add_subparsers(dest="subcommand", required=True)

    c = sub.add_parser("convert", parents=[common], help="moments, free cumulants and S-transforms")
    c.add_argument(
        "--op",
        required=True,
        choices=[
            "to-cumulants",
            "to-moments",
            "oracle",
            "dilate",
            "add",
            "power",
            "translate",
            "to-s",
            "from-s",
            "multiply",
            "fuss-catalan",
            "marchenko-pastur",
        ],
    )
    for name in ("moments", "cumulants", "cumulants2", "s-series", "s-series2"):
        c.add_argument(f"--{name}", type=str, default=None, help="comma-separated rationals")
    for name in ("t", "b", "p", "lam"):
        c.add_argument(f"--{name}", type=str, default=None)
    c.add_argument("--n", type=int, default=None)

    v = sub.add_parser("varfun", parents=[common], help="variance functions")
    v.add_argument(
        "--op",
        required=True,
        choices=["from-moments", "to-moments", "omega-moments", "apply", "product-form", "from-s"],
    )
    for name in ("moments", "varfun", "varfun2", "s-series"):
        v.add_argument(f"--{name}", type=str, default=None, help="comma-separated rationals")
    v.add_argument("--tag", choices=[t.value for t in VarfunOp], default=None)
    v.add_argument("--param", type=str, default=None)
    v.add_argument("--class1", choices=[c.value for c in VarClass], default=None)
    v.add_argument("--class2", choices=[c.value for c in VarClass], default=None)
    for name in ("a", "b", "c"):
        v.add_argument(f"--{name}", type=str, default="0")
    v.add_argument("--factors", type=str, default=None, help='"b1:p1,b2:p2"')

    cc = sub.add_parser("check-cubic", parents=[common], help="closed-form test for 1+am+bm^2+cm^3")
    cc.add_argument("--a", type=str, default="0")
    cc.add_argument("--b", type=str, required=True)
    cc.add_argument("--c", type=str, required=True)

    cq = sub.add_parser("check-quartic", parents=[common], help="closed-form test for 1+am^4")
    cq.add_argument("--a", type=str, required=True)

    e = sub.add_parser("evidence", parents=[common], help="Hankel evidence for class membership")
    e.add_argument("--varfun", type=str, default=None)
    e.add_argument("--target", choices=[t.value for t in Target], default=Target.V.value)

    pl = sub.add_parser("polys", parents=[common], help="polynomial families")
    pl.add_argument("--varfun", type=str, default=None)
    pl.add_argument("--recursion", type=str, default=None)
    pl.add_argument("--kind", choices=[k.value.lower() for k in RecursionKind], default="general")
    pl.add_argument("--moments", type=str, default=None, help="also report the Gram matrix")
    pl.add_argument("--check-identity", action="store_true")

    d = sub.add_parser("d-orth", parents=[common], help="d-orthogonality zero pattern")
    d.add_argument("--varfun", type=str, default=None)
    d.add_argument("--d", type=int, required=True)
    d.add_argument("--k-max", type=int, default=None, help="also check L(x^k P_n) for k <= k-max")

    h = sub.add_parser("hankel", parents=[common], help="Hankel leading principal minors")
    h.add_argument("--seq", type=str, default=None)
    h.add_argument("--shift", type=int, default=0)
    h.add_argument("--size", type=int, default=None)

    j = sub.add_parser("jacobi", parents=[common], help="Jacobi coefficients of a moment sequence")
    j.add_argument("--moments", type=str, default=None)
    j.add_argument("--depth", type=int, default=None)
    j.add_argument("--rebuild", action="store_true", help="also rebuild moments from the coefficients")

    g = sub.add_parser("gf-reduce", parents=[common], help="reduce M(z)/(N(z)-zx) to variance-function form")
    g.add_argument("--m-series", type=str, default=None)
    g.add_argument("--n-series", type=str, default=None)
    g.add_argument("--moments", type=str, default=None)
    g.add_argument("--polys", action="store_true", help="also expand T_n")

    sub.add_parser("demo", parents=[common], help="reproduce the Fuss-number example")
    return p


# --- helpers ----------------------------------------------------------------


def _vector(args: argparse.Namespace, payload: Payload, name: str) -> tuple[Fraction, ...]:
    flag = getattr(args, name, None)
    if flag is not None:
        return parse_rational_list(flag)
    value = getattr(payload, name, None)
    if value is not None:
        return tuple(value)
    raise UsageError(f"missing --{name.replace('_', '-')} (flag or payload key {name!r})")


def _scalar(args: argparse.Namespace, name: str) -> Fraction:
    value = getattr(args, name, None)
    if value is None:
        raise UsageError(f"missing --{name}")
    return parse_rational(value)


def _order(args: argparse.Namespace, config: AppConfig) -> int:
    order = getattr(args, "order", None)
    return int(order) if order is not None else config.series.default_order


def _varfun(args: argparse.Namespace, payload: Payload, name: str, order: int) -> VarianceFunction:
    """CLI variance functions are polynomials; pad them to the working order."""
    values = _vector(args, payload, name)
    return VarianceFunction.from_coefficients(values, max(order, len(values) - 1))


def _factors(args: argparse.Namespace, payload: Payload) -> list[tuple[Fraction, Fraction]]:
    if args.factors:
        out = []
        for item in args.factors.split(","):
            bj, sep, pj = item.partition(":")
            if not sep:
                raise UsageError(f"factor {item!r} must look like b:p")
            out.append((parse_rational(bj), parse_rational(pj)))
        return out
    return [tuple(f) for f in payload.factors or []]


# --- handlers ---------------------------------------------------------------


def _convert(args: argparse.Namespace, payload: Payload, config: AppConfig) -> Any:
    op = args.op
    order = _order(args, config)
    if op == "to-cumulants":
        return moments_to_free_cumulants(MomentSequence(_vector(args, payload, "moments")))
    if op == "to-moments":
        return free_cumulants_to_moments(FreeCumulantSequence(_vector(args, payload, "cumulants")))
    if op == "oracle":
        k = FreeCumulantSequence(_vector(args, payload, "cumulants"))
        n = args.n if args.n is not None else k.order
        value = moments_via_noncrossing(k, n, cap=config.oracle.max_n)
        return {"n": n, "moment": format_rational(value)}
    if op == "dilate":
        return dilate(MomentSequence(_vector(args, payload, "moments")), _scalar(args, "t"))
    if op == "add":
        return free_additive_convolve(
            FreeCumulantSequence(_vector(args, payload, "cumulants")),
            FreeCumulantSequence(_vector(args, payload, "cumulants2")),
        )
    if op == "power":
        return free_convolution_power(
            FreeCumulantSequence(_vector(args, payload, "cumulants")), _scalar(args, "t")
        )
    if op == "translate":
        return translate(FreeCumulantSequence(_vector(args, payload, "cumulants")), _scalar(args, "t"))
    if op == "to-s":
        return moments_to_S(MomentSequence(_vector(args, payload, "moments")))
    if op == "from-s":
        return moments_from_S(STransformSeries(FormalPowerSeries(_vector(args, payload, "s_series"))))
    if op == "multiply":
        return free_multiplicative_convolve(
            STransformSeries(FormalPowerSeries(_vector(args, payload, "s_series"))),
            STransformSeries(FormalPowerSeries(_vector(args, payload, "s_series2"))),
        )
    if op == "fuss-catalan":
        return fuss_catalan_power(_scalar(args, "b"), _scalar(args, "p"), order)
    return marchenko_pastur_cumulants(_scalar(args, "lam"), order)


def _varfun_cmd(args: argparse.Namespace, payload: Payload, config: AppConfig) -> Any:
    op = args.op
    order = _order(args, config)
    if op == "from-moments":
        return varfun_from_moments(MomentSequence(_vector(args, payload, "moments")))
    if op == "to-moments":
        return moments_from_varfun(_varfun(args, payload, "varfun", order), order)
    if op == "omega-moments":
        return omega_moments_from_varfun(_varfun(args, payload, "varfun", order), order)
    if op == "apply":
        if args.tag is None:
            raise UsageError("missing --tag")
        v1 = _varfun(args, payload, "varfun", order).with_class(
            VarClass(args.class1) if args.class1 else None, "asserted"
        )
        v2 = None
        if args.varfun2 is not None or payload.varfun2 is not None:
            v2 = _varfun(args, payload, "varfun2", order).with_class(
                VarClass(args.class2) if args.class2 else None, "asserted"
            )
        return apply_varfun_op(args.tag, v1, v2, args.param)
    if op == "product-form":
        return product_form_varfun(args.a, args.b, args.c, _factors(args, payload), order)
    s = STransformSeries(FormalPowerSeries(_vector(args, payload, "s_series")))
    return varfun_from_S(s, order)


def _check_cubic(args: argparse.Namespace, payload: Payload, config: AppConfig) -> Any:
    return cubic_membership(args.a, args.b, args.c)


def _check_quartic(args: argparse.Namespace, payload: Payload, config: AppConfig) -> Any:
    return quartic_axis_membership(args.a)


def _evidence(args: argparse.Namespace, payload: Payload, config: AppConfig) -> Any:
    order = _order(args, config)
    return membership_evidence(_varfun(args, payload, "varfun", order), order, args.target)


def _polys(args: argparse.Namespace, payload: Payload, config: AppConfig) -> Any:
    order = _order(args, config)
    if args.varfun is not None or payload.varfun is not None:
        v = _varfun(args, payload, "varfun", order)
        fam = polynomials_from_varfun(v, order)
        out: dict[str, Any] = {"family": fam}
    else:
        spec = RecursionSpec(_vector(args, payload, "recursion"), RecursionKind(args.kind.upper()))
        fam = polynomials_from_recursion(spec, order)
        v = associated_varfun(spec, order)
        out = {"family": fam, "recursion": spec, "associated_varfun": v}
    if args.check_identity:
        out["identity"] = generating_function_identity_check(fam, v, order)
    if args.moments is not None or payload.moments is not None:
        out["gram"] = gram_matrix(fam, MomentSequence(_vector(args, payload, "moments")))
    return out


def _d_orth(args: argparse.Namespace, payload: Payload, config: AppConfig) -> Any:
    order = _order(args, config)
    v = _varfun(args, payload, "varfun", 2 * order)
    report = d_orthogonality_check(v, args.d, order)
    if args.k_max is None:
        return report
    out = report.to_dict()
    out["moment_pattern"] = [w.to_dict() for w in moment_pattern_check(v, args.d, order, k_max=args.k_max)]
    return out


def _hankel(args: argparse.Namespace, payload: Payload, config: AppConfig) -> Any:
    seq = _vector(args, payload, "seq")
    size = args.size if args.size is not None else (len(seq) - 1 - args.shift) // 2 + 1
    return hankel_minors(seq, shift=args.shift, size=size)


def _jacobi(args: argparse.Namespace, payload: Payload, config: AppConfig) -> Any:
    m = MomentSequence(_vector(args, payload, "moments"))
    jac = jacobi_from_moments(m, depth=args.depth)
    if not args.rebuild:
        return jac
    return {"jacobi": jac, "rebuilt": moments_from_jacobi(jac, m.order)}


def _gf_reduce(args: argparse.Namespace, payload: Payload, config: AppConfig) -> Any:
    m_series = FormalPowerSeries(_vector(args, payload, "m_series"))
    n_series = FormalPowerSeries(_vector(args, payload, "n_series"))
    reduction = reduce_general_gf(m_series, n_series, MomentSequence(_vector(args, payload, "moments")))
    if not args.polys:
        return reduction
    k = reduction.order_checked
    return {
        "reduction": reduction,
        "t_polys": polynomials_from_general_gf(m_series, n_series, k),
        "p_polys": polynomials_from_varfun(reduction.varfun, k),
    }


def _demo(args: argparse.Namespace, payload: Payload, config: AppConfig) -> Any:
    return run_demo(_order(args, config))


HANDLERS: dict[str, Handler] = {
    "convert": _convert,
    "varfun": _varfun_cmd,
    "check-cubic": _check_cubic,
    "check-quartic": _check_quartic,
    "evidence": _evidence,
    "polys": _polys,
    "d-orth": _d_orth,
    "hankel": _hankel,
    "jacobi": _jacobi,
    "gf-reduce": _gf_reduce,
    "demo": _demo,
}


# --- dispatch ---------------------------------------------------------------


def error_output(exc: BaseException) -> str:
    return safe_json_dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}) + "\n"


def dispatch(req: CommandRequest, config: AppConfig) -> CommandResult:
    handler = HANDLERS.get(req.subcommand)
    if handler is None:
        return CommandResult(EXIT_USAGE_ERROR, error_output(UsageError(f"unknown subcommand {req.subcommand}")))
    try:
        result = handler(req.options, req.payload, config)
    except DomainError as exc:
        log.info("domain error", extra={"subcommand": req.subcommand, "error": type(exc).__name__})
        return CommandResult(EXIT_DOMAIN_ERROR, error_output(exc))
    except (UsageError, ConfigError) as exc:
        return CommandResult(EXIT_USAGE_ERROR, error_output(exc))

    if config.output.format == "text":
        output = render_text(result, title=req.subcommand)
    else:
        output = render_json(result, indent=config.output.indent)
    return CommandResult(EXIT_OK, output)
