import click

from ...core.entities import make_params
from ..jobs import run_solve
from ..models.run_spec import OutFormat, RunSpec
from ..options import build_integrator_config, integrator_options, output_options, parameter_options


@click.command("solve")
@parameter_options
@integrator_options
@output_options
def solve(a, b, tau0, tau_max, rtol, atol, stride, out, out_format):
    """Integrate u on [0, tau_max] and tabulate tau, u, u'."""
    # fail with the domain error before pydantic sees the values
    make_params(a, b, 1, special=True)
    spec = RunSpec(
        a=a,
        b=b,
        cfg=build_integrator_config(tau0, tau_max, rtol, atol, stride),
        out_format=OutFormat(out_format),
        out_path=out,
    )
    for path in run_solve(spec):
        click.echo(str(path))
