# setcodes/cli/dispatcher.py
import logging

from pydantic import ValidationError

from setcodes.cli.commands import COMMANDS, Command, CommandResult
from setcodes.config.settings import Settings
from setcodes.errors import (
    DecodeError,
    GuardExceeded,
    ParamsError,
    RangeError,
    SetCodeError,
    WordFormatError,
)
from setcodes.schemas import ErrorObject, ErrorReport, RunConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_GUARD = 3


def exit_code_for(error: SetCodeError) -> int:
    if isinstance(error, GuardExceeded):
        return EXIT_GUARD
    if isinstance(error, (ParamsError, RangeError, WordFormatError)):
        return EXIT_USAGE
    return EXIT_FAILURE


def error_report(error: SetCodeError) -> ErrorReport:
    return ErrorReport(
        error=ErrorObject(
            code=error.code,
            message=error.message,
            data=error.data,
            reason=error.reason if isinstance(error, DecodeError) else None,
        )
    )


class CommandDispatcher:
    def __init__(self, commands: dict[str, Command] | None = None):
        self.commands = COMMANDS if commands is None else commands

    def get(self, name: str) -> Command:
        try:
            return self.commands[name]
        except KeyError:
            raise RangeError(-32601, "Command not found", {"command": name}) from None

    def dispatch(self, config: RunConfig, settings: Settings) -> CommandResult:
        try:
            fn = self.get(config.command)
            return fn(config, settings)
        except SetCodeError as e:
            logger.error("%s failed: %s", config.command, e)
            return CommandResult(exit_code_for(e), error_report(e))
        except ValidationError as e:
            # Params validation surfaces as pydantic errors
            err = ParamsError(-32602, "Inadmissible parameters", {"errors": e.errors(include_url=False, include_context=False)})
            logger.error("%s failed: %s", config.command, err)
            return CommandResult(EXIT_USAGE, error_report(err))
        except Exception as e:
            logger.exception("%s crashed", config.command)
            err = SetCodeError(-32000, "Internal error", {"exception": str(e)})
            return CommandResult(EXIT_FAILURE, error_report(err))
