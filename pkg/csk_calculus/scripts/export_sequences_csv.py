from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from csk_calculus.core.config import load_config
from csk_calculus.demo.report import run_demo


def _parse_args(argv: list[str]) -> argparse.Namespace:
    p = argparse.ArgumentParser(prog="export_sequences_csv")
    p.add_argument("--config", type=str, default=None)
    p.add_argument("--out", type=str, default="sequences.csv")
    p.add_argument("--order", type=int, default=None)
    return p.parse_args(argv)


def main(argv: list[str] | None = None) -> int:
    args = _parse_args(sys.argv[1:] if argv is None else argv)
    cfg = load_config(args.config)
    order = args.order if args.order is not None else cfg.series.default_order
    report = run_demo(order)

    rows = []
    for n in range(order + 1):
        rows.append(
            {
                "n": n,
                "fuss": report.fuss[n],
                "s": report.s[n],
                # kappa_n is indexed from 1
                "kappa": report.kappa[n - 1] if n >= 1 else "",
            }
        )
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", newline="", encoding="utf-8") as f:
        w = csv.DictWriter(f, fieldnames=list(rows[0].keys()))
        w.writeheader()
        w.writerows(rows)
    print(f"Wrote {len(rows)} rows to {out}")
    return 0


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
