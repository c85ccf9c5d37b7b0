import logging
from concurrent.futures import ProcessPoolExecutor

import click

from ...config import config
from ...core.exceptions import ParameterError
from ..figures import FIGURE_TAU_MAX, FIGURES, render_figure
from ..models.run_spec import OutFormat
from ..options import build_integrator_config, output_options

logger = logging.getLogger(__name__)


@click.command("figure")
@click.argument("number", type=int, required=False)
@click.option("--all", "render_all", is_flag=True, help="Render figures 1 to 7")
@click.option("--jobs", type=int, default=1, show_default=True,
              help="Worker processes for --all")
@click.option("--tau-max", "tau_max", type=float, default=FIGURE_TAU_MAX, show_default=True)
@click.option("--rtol", type=float, default=config.RTOL, show_default=True)
@click.option("--atol", type=float, default=config.ATOL, show_default=True)
@click.option("--stride", type=float, default=config.STRIDE, show_default=True)
@output_options
def figure(number, render_all, jobs, tau_max, rtol, atol, stride, out, out_format):
    """Regenerate one published figure (or all of them with --all)."""
    if render_all == (number is not None):
        raise ParameterError("give either a figure number or --all")
    if jobs < 1:
        raise ParameterError(f"--jobs must be at least 1, got {jobs}")
    cfg = build_integrator_config(config.TAU0, tau_max, rtol, atol, stride)
    fmt = OutFormat(out_format)
    numbers = sorted(FIGURES) if render_all else [number]

    if jobs == 1 or len(numbers) == 1:
        results = [render_figure(n, cfg, out, fmt) for n in numbers]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(render_figure, n, cfg, out, fmt) for n in numbers]
            results = [f.result() for f in futures]

    for paths in results:
        for path in paths:
            click.echo(str(path))
