"""Command-line surface: ``solve``, ``compare``, ``figure`` and ``selftest``."""

import logging

import click
from dotenv import dotenv_values
from pydantic import ValidationError

from ..config import config
from ..core.exceptions import DP3Error, OutputError
from .commands import compare, figure, selftest, solve
from .options import defaults_from_file

logger = logging.getLogger(__name__)

_EXIT_VALIDATION = 2


def _error_line(kind: str, message: object) -> str:
    text = " ".join(str(message).split())
    return f"error={kind} message={text}"


class DP3Group(click.Group):
    """Turns library and usage errors into one stderr line and an exit code."""

    @staticmethod
    def _report_usage(e: click.UsageError) -> None:
        logger.debug(f"usage error: {e.format_message()}")
        click.echo(_error_line("UsageError", e.format_message()), err=True)

    def make_context(self, info_name, args, parent=None, **extra) -> click.Context:
        # covers the group's own options; subcommand parsing happens in invoke
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except click.exceptions.NoArgsIsHelpError:
            raise
        except click.UsageError as e:
            self._report_usage(e)
            raise click.exceptions.Exit(e.exit_code)

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except click.exceptions.NoArgsIsHelpError:
            raise
        except click.UsageError as e:
            self._report_usage(e)
            ctx.exit(e.exit_code)
        except DP3Error as e:
            logger.debug(f"{type(e).__name__}: {e}")
            click.echo(_error_line(type(e).__name__, e), err=True)
            ctx.exit(e.exit_code)
        except ValidationError as e:
            logger.debug(f"invalid run specification: {e}")
            click.echo(_error_line("ValidationError", e), err=True)
            ctx.exit(_EXIT_VALIDATION)
        except OSError as e:
            logger.debug(f"output failure: {e}")
            click.echo(_error_line(type(e).__name__, e), err=True)
            ctx.exit(OutputError.exit_code)


def _load_config_file(ctx: click.Context, param: click.Parameter, value):
    if value is None:
        return value
    defaults = defaults_from_file(dotenv_values(value))
    ctx.default_map = {name: dict(defaults) for name in ctx.command.commands}
    logger.debug(f"defaults from {value}: {sorted(defaults)}")
    return value


def create_cli() -> click.Group:
    @click.group(cls=DP3Group)
    @click.option(
        "--config",
        "config_file",
        type=click.Path(exists=True, dir_okay=False),
        callback=_load_config_file,
        is_eager=True,
        expose_value=False,
        help="key = value file with option defaults; flags take precedence",
    )
    @click.option(
        "--log-level",
        type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
        default=config.LOG_LEVEL,
        show_default=True,
    )
    def cli(log_level):
        """Odd solution of degenerate Painleve III vanishing at the origin."""
        logging.getLogger().setLevel(log_level.upper())

    cli.add_command(solve)
    cli.add_command(compare)
    cli.add_command(figure)
    cli.add_command(selftest)
    return cli
