# setcodes/cli/commands.py
from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from pydantic import BaseModel

from setcodes.analysis.bounds import evaluate_bounds
from setcodes.analysis.suite import Scope, analyse_word, run_suite
from setcodes.cli.simulate import simulate
from setcodes.codecs import SetCodec, build_codec
from setcodes.codecs.message import hex_to_int, int_to_hex
from setcodes.config.settings import Settings
from setcodes.core.bits import canonical_rows
from setcodes.core.wordfile import format_word, read_word, write_word
from setcodes.errors import OUT_OF_RANGE, ParamsError
from setcodes.schemas import CodewordReport, RunConfig, VerifyReport

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    exit_code: int
    report: BaseModel
    text: str | None = None
    """Plain-text output printed instead of the report when --json is off."""


Command = Callable[[RunConfig, Settings], CommandResult]
COMMANDS: dict[str, Command] = {}


def command(name: str):
    def decorator(fn: Command) -> Command:
        if name in COMMANDS:
            raise ValueError(f"command {name} already registered")
        COMMANDS[name] = fn
        return fn

    return decorator


def _codec(config: RunConfig, settings: Settings) -> SetCodec:
    return build_codec(config.codec, config.params(), settings)


def _codeword_report(codec: SetCodec, value: int, rows: list[str]) -> CodewordReport:
    p = codec.params
    return CodewordReport(codec=codec.codec.value, M=p.M, L=p.L, K=codec.budget, message=int_to_hex(value), word=rows)


@command("encode")
def cmd_encode(config: RunConfig, settings: Settings) -> CommandResult:
    codec = _codec(config, settings)
    value = hex_to_int(config.message or "0")
    word = codec.encode_int(value)
    if config.output is not None:
        write_word(config.output, word)
        logger.info("Codeword written to %s", config.output)
    report = _codeword_report(codec, value, [str(s) for s in canonical_rows(word)])
    return CommandResult(0, report, None if config.output else format_word(word).rstrip("\n"))


@command("decode")
def cmd_decode(config: RunConfig, settings: Settings) -> CommandResult:
    if config.input is None:
        raise OUT_OF_RANGE({"reason": "decode needs --in"})
    codec = _codec(config, settings)
    word = read_word(config.input)
    value = codec.decode_int(word)
    if config.output is not None:
        Path(config.output).write_text(int_to_hex(value) + "\n")
    report = _codeword_report(codec, value, [str(s) for s in canonical_rows(word)])
    return CommandResult(0, report, int_to_hex(value))


@command("simulate")
def cmd_simulate(config: RunConfig, settings: Settings) -> CommandResult:
    codec = _codec(config, settings)
    report = simulate(codec, config, settings)
    within_budget = report.weight <= codec.budget
    failed = within_budget and report.successes < report.patterns
    if failed:
        logger.error(
            "%d of %d within-budget patterns not recovered", report.patterns - report.successes, report.patterns
        )
    return CommandResult(1 if failed else 0, report)


@command("bounds")
def cmd_bounds(config: RunConfig, settings: Settings) -> CommandResult:
    params = config.params()
    try:
        codec = _codec(config, settings)
    except ParamsError as e:
        logger.warning("No %s code at these parameters (%s); reporting bounds only", config.codec, e)
        return CommandResult(0, evaluate_bounds(params.M, params.L, params.K))
    report = evaluate_bounds(params.M, params.L, codec.budget, codec.redundancy(), codec.codec.value)
    return CommandResult(0, report)


@command("verify")
def cmd_verify(config: RunConfig, settings: Settings) -> CommandResult:
    if config.input is not None:
        word = read_word(config.input)
        k = 1 if config.K is None else config.K
        analysis = analyse_word(word, k, settings)
        report = VerifyReport(scope={"M": word.size, "L": word.length, "K": k}, passed=analysis.passed, word=analysis)
        return CommandResult(0 if report.passed else 1, report)

    defaults = Scope()
    scope = Scope(
        max_M=config.M or defaults.max_M,
        max_L=config.L or defaults.max_L,
        max_K=defaults.max_K if config.K is None else config.K,
    )
    report = run_suite(scope, config.checks, settings)
    return CommandResult(0 if report.passed else 1, report)
