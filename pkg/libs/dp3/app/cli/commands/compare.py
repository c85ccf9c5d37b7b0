import click

from ...core.entities import Quantity, make_params
from ..jobs import QUANTITY_ORDER, run_compare
from ..models.run_spec import OutFormat, RunSpec
from ..options import build_integrator_config, integrator_options, output_options, parameter_options


@click.command("compare")
@parameter_options
@integrator_options
@output_options
@click.option(
    "--output",
    "output",
    type=click.Choice([q.value for q in QUANTITY_ORDER]),
    multiple=True,
    default=("i1",),
    show_default=True,
    help="Quantity to compare; repeat for several",
)
@click.option(
    "--correction",
    type=click.Choice(["on", "off"]),
    default="off",
    show_default=True,
    help="Add the oscillatory correction to the asymptotic column",
)
def compare(a, b, tau0, tau_max, rtol, atol, stride, out, out_format, output, correction):
    """Compare the integrated quantities with their large-tau asymptotics."""
    make_params(a, b, 1, special=True)
    spec = RunSpec(
        a=a,
        b=b,
        cfg=build_integrator_config(tau0, tau_max, rtol, atol, stride),
        outputs=frozenset(Quantity(o) for o in output),
        correction=correction == "on",
        out_format=OutFormat(out_format),
        out_path=out,
    )
    for path in run_compare(spec):
        click.echo(str(path))
