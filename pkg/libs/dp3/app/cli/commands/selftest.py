import click

from ...services.selftest import run_selftest


@click.command("selftest")
@click.option("--perturb-b", "perturb_b", type=float, default=0.0, hidden=True)
@click.pass_context
def selftest(ctx, perturb_b):
    """Run the invariant suite; exit status 1 when any check fails."""
    report = run_selftest(perturb_b=perturb_b)
    click.echo(report.render())
    if not report.passed:
        ctx.exit(1)
