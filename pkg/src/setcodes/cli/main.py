# setcodes/cli/main.py
"""
``setcodes`` command line.

Flags override ``SETCODES_*`` environment variables, which override the
built-in defaults. Exit codes: 0 success, 1 decode or verification
failure, 2 usage error, 3 guard exceeded.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Sequence

from pydantic import ValidationError

from setcodes.cli.dispatcher import EXIT_USAGE, CommandDispatcher
from setcodes.codecs.base import Codec
from setcodes.config.settings import Settings, env
from setcodes.logs import configure_logging
from setcodes.schemas import ErrorReport, RunConfig

logger = logging.getLogger(__name__)

# RunConfig fields that may come from SETCODES_<NAME>; files, messages and checks come only from flags
ENV_FIELDS = (
    "codec",
    "M",
    "L",
    "K",
    "seed",
    "trials",
    "patterns",
    "weight",
    "exhaustive",
    "guard",
    "workers",
    "cache_dir",
    "json",
    "timing",
)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--codec", choices=[c.value for c in Codec])
    common.add_argument("--M", type=int, dest="M")
    common.add_argument("--L", type=int, dest="L")
    common.add_argument("--K", type=int, dest="K")
    common.add_argument("--guard", type=int)
    common.add_argument("--workers", type=int)
    common.add_argument("--cache-dir", type=Path, dest="cache_dir")
    common.add_argument("--in", type=Path, dest="input")
    common.add_argument("--out", type=Path, dest="output")
    common.add_argument("--json", action="store_true", help="print the JSON report")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog="setcodes", description="Codes for unordered sets of binary strings")
    sub = parser.add_subparsers(dest="command", required=True)

    enc = sub.add_parser("encode", parents=[common], help="encode a hex message into a word file")
    enc.add_argument("--message", help="message as hexadecimal (default 0)")

    sub.add_parser("decode", parents=[common], help="decode a word file into a hex message")

    sim = sub.add_parser("simulate", parents=[common], help="random messages through the substitution channel")
    sim.add_argument("--seed", type=int)
    sim.add_argument("--trials", type=int)
    sim.add_argument("--patterns", type=int, help="random patterns per trial, each of exactly --weight substitutions")
    sim.add_argument("--weight", type=int, help="exact number of substitutions in every pattern (default K)")
    sim.add_argument("--exhaustive", action="store_true", help="clean word plus every single flip")
    sim.add_argument("--timing", action="store_true", help="include wall time in the report")

    sub.add_parser("bounds", parents=[common], help="redundancy bounds and the code's exact redundancy")

    ver = sub.add_parser(
        "verify",
        parents=[common],
        help="exhaustive checks up to --M, --L, --K, or the checks for one word given with --in",
    )
    ver.add_argument("--check", action="append", dest="checks", help="run only this check (repeatable)")
    return parser


def merge_config(args: argparse.Namespace) -> dict[str, Any]:
    values = {k: v for k, v in vars(args).items() if k != "verbose" and v is not None and v is not False}
    for name in ENV_FIELDS:
        if name not in values and (raw := env(name.upper())):
            values[name] = raw
    return values


def _log_level(verbose: int) -> str | int:
    if verbose >= 2:
        return logging.DEBUG
    if verbose == 1:
        return logging.INFO
    return Settings().log_level


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    level = _log_level(args.verbose)
    configure_logging(level)

    try:
        config = RunConfig.model_validate(merge_config(args))
    except ValidationError as e:
        logger.error("invalid arguments: %s", e)
        return EXIT_USAGE

    result = CommandDispatcher().dispatch(config, config.settings(level))
    if isinstance(result.report, ErrorReport) and not config.as_json:
        return result.exit_code
    if config.as_json or result.text is None:
        out = result.report.model_dump_json(indent=2)
        if config.command in ("simulate", "bounds", "verify") and config.output is not None:
            config.output.write_text(out + "\n")
        print(out)
    else:
        print(result.text)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
