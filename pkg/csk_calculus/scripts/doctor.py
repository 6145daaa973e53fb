from __future__ import annotations

import argparse
import sys

from dotenv import load_dotenv

from csk_calculus.core.config import load_config
from csk_calculus.core.constants import SHIFTED_CUMULANT_DET
from csk_calculus.core.exceptions import CskError
from csk_calculus.core.utils import platform_summary
from csk_calculus.demo.report import run_demo
from csk_calculus.moments.hankel import hankel_minors
from csk_calculus.series.fps import FormalPowerSeries, series_revert
from csk_calculus.varfun.membership import cubic_membership


def _parse_args(argv: list[str]) -> argparse.Namespace:
    p = argparse.ArgumentParser(prog="doctor")
    p.add_argument("--config", type=str, default=None)
    return p.parse_args(argv)


def main(argv: list[str] | None = None) -> int:
    args = _parse_args(sys.argv[1:] if argv is None else argv)
    load_dotenv(override=False)

    summary = platform_summary()
    print(f"[OK] Python {summary['python']} on {summary['platform']}")

    try:
        cfg = load_config(args.config)
    except CskError as exc:
        print(f"[FAIL] Config: {exc}")
        return 2
    print(f"[OK] Config: default_order={cfg.series.default_order} oracle.max_n={cfg.oracle.max_n}")

    g = FormalPowerSeries.from_polynomial([0, 1, 1], 6)
    if series_revert(series_revert(g)) != g:
        print("[FAIL] Series reversion is not an involution")
        return 2
    print("[OK] Series reversion")

    minors = hankel_minors([1, 0, 1, 0, 2, 3, 5], size=4).minors
    if minors[-1] != -8:
        print(f"[FAIL] Hankel minor 1-c^2 at c=3 gave {minors[-1]}")
        return 2
    print("[OK] Hankel determinants")

    verdict = cubic_membership(2, 2, 1)
    print(f"[OK] Cubic criterion: in_V={verdict.in_v.claim.value} in_Vinf={verdict.in_v_infinity.claim.value}")

    try:
        report = run_demo(max(cfg.series.default_order, 12))
    except CskError as exc:
        print(f"[FAIL] Demo: {exc}")
        return 2
    if report.det_witness != SHIFTED_CUMULANT_DET:
        print(f"[FAIL] Demo determinant {report.det_witness}")
        return 2
    print(f"[OK] Demo: {len(report.identity_checks)} identities, det={report.det_witness}")
    return 0


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
