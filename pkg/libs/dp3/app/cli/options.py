"""Option decorators and parameter types shared by the commands."""

from pathlib import Path
from typing import Callable, Dict, Optional

import click

from ..config import config
from ..services.integrator import IntegratorConfig
from .models.run_spec import OutFormat, parse_number

# keys accepted in a --config file, mapped onto click parameter names
_CONFIG_KEYS = {
    "a": "a",
    "b": "b",
    "tau0": "tau0",
    "tau_max": "tau_max",
    "tau-max": "tau_max",
    "rtol": "rtol",
    "atol": "atol",
    "stride": "stride",
    "out": "out",
    "format": "out_format",
    "output": "output",
    "correction": "correction",
    "jobs": "jobs",
}


class RationalType(click.ParamType):
    """Floats or exact rationals such as ``-1/8``."""

    name = "number"

    def convert(self, value, param, ctx):
        if isinstance(value, float):
            return value
        try:
            return parse_number(value)
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a number or a fraction p/q", param, ctx)


RATIONAL = RationalType()


def defaults_from_file(values: Dict[str, Optional[str]]) -> Dict[str, object]:
    """Translate dotenv-style key/value pairs into a click default map entry."""
    defaults: Dict[str, object] = {}
    for raw_key, raw_value in values.items():
        key = _CONFIG_KEYS.get(raw_key.strip().lower())
        if key is None or raw_value is None:
            continue
        if key == "output":
            defaults[key] = [v.strip() for v in raw_value.split(",") if v.strip()]
        else:
            defaults[key] = raw_value.strip()
    return defaults


def integrator_options(func: Callable) -> Callable:
    decorators = [
        click.option("--tau0", type=float, default=config.TAU0, show_default=True,
                      help="Series handoff point"),
        click.option("--tau-max", "tau_max", type=float, default=config.TAU_MAX,
                      show_default=True, help="End of the integration interval"),
        click.option("--rtol", type=float, default=config.RTOL, show_default=True),
        click.option("--atol", type=float, default=config.ATOL, show_default=True),
        click.option("--stride", type=float, default=config.STRIDE, show_default=True,
                      help="Spacing of the output grid"),
    ]
    for decorator in reversed(decorators):
        func = decorator(func)
    return func


def output_options(func: Callable) -> Callable:
    func = click.option(
        "--format",
        "out_format",
        type=click.Choice([f.value for f in OutFormat]),
        default=OutFormat.BOTH.value,
        show_default=True,
    )(func)
    func = click.option(
        "--out",
        type=click.Path(file_okay=False, path_type=Path),
        default=Path(config.OUTPUT_DIR),
        show_default=True,
        help="Output directory",
    )(func)
    return func


def parameter_options(func: Callable) -> Callable:
    func = click.option("--b", "b", type=RATIONAL, required=True,
                        help="Positive parameter b")(func)
    func = click.option("--a", "a", type=RATIONAL, required=True,
                        help="Real parameter a < 0, e.g. -8 or -1/8")(func)
    return func


def build_integrator_config(
    tau0: float, tau_max: float, rtol: float, atol: float, stride: float
) -> IntegratorConfig:
    return IntegratorConfig(
        tau0=tau0, tau_max=tau_max, rtol=rtol, atol=atol, dense_output_stride=stride
    )
