from __future__ import annotations

import argparse
import logging
import sys
from typing import Any

from csk_calculus.cli.commands import CommandRequest, build_parser, dispatch, error_output
from csk_calculus.cli.payloads import load_payload
from csk_calculus.core.config import load_config
from csk_calculus.core.constants import EXIT_USAGE_ERROR
from csk_calculus.core.exceptions import ConfigError, UsageError
from csk_calculus.core.utils import platform_summary, setup_logging


def _cli_overrides(args: argparse.Namespace) -> dict[str, Any]:
    out: dict[str, Any] = {}
    if args.log_level:
        out["logging"] = {"level": args.log_level}
    if args.order is not None:
        out["series"] = {"default_order": args.order}
    if args.format:
        out["output"] = {"format": args.format}
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        # argparse already printed usage to stderr.
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE_ERROR

    try:
        config = load_config(args.config, overrides=_cli_overrides(args))
        setup_logging(config.logging.level, config.logging.log_dir)
        payload = load_payload(args.input)
    except (ConfigError, UsageError) as exc:
        sys.stdout.write(error_output(exc))
        return EXIT_USAGE_ERROR

    log = logging.getLogger("csk_calculus")
    log.debug("starting", extra={"subcommand": args.subcommand, "platform": dict(platform_summary())})

    result = dispatch(CommandRequest(subcommand=args.subcommand, options=args, payload=payload), config)
    sys.stdout.write(result.output)
    return result.exit_code


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
