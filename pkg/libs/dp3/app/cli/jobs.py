"""Job runners behind ``solve``, ``compare`` and ``figure``."""

import logging
from pathlib import Path
from typing import List, Optional

from ..core.entities import Quantity, make_params
from ..services.comparison import compare_grid
from ..services.integrator import integrate
from . import writers
from .models.run_spec import RunSpec

logger = logging.getLogger(__name__)

QUANTITY_ORDER = [Quantity.SOLUTION, Quantity.I1, Quantity.RE_I2, Quantity.IM_I2]


def run_solve(spec: RunSpec, stem: str = "solution", title: str = "") -> List[Path]:
    """Integrate the special solution and write u(tau) as CSV and/or SVG."""
    params = make_params(spec.a, spec.b, 1, special=True)
    out_dir = writers.ensure_directory(spec.out_path)
    traj = integrate(params, spec.cfg)
    written = []
    if spec.out_format.wants_csv:
        written.append(
            writers.write_csv(
                out_dir / f"{stem}.csv", writers.SOLUTION_HEADER, writers.solution_rows(traj)
            )
        )
    if spec.out_format.wants_svg:
        written.append(
            writers.write_svg(
                out_dir / f"{stem}.svg",
                title or f"u(tau), a={spec.a:g}, b={spec.b:g}",
                traj.taus,
                writers.solution_series(traj),
            )
        )
    return written


def run_compare(spec: RunSpec, stem: Optional[str] = None, title: str = "") -> List[Path]:
    """Tabulate numeric against asymptotic values for every requested quantity.

    One file pair per quantity, named after the quantity unless ``stem`` is
    given (only meaningful for a single quantity).
    """
    params = make_params(spec.a, spec.b, 1, special=True)
    out_dir = writers.ensure_directory(spec.out_path)
    traj = integrate(params, spec.cfg)
    written = []
    for quantity in (q for q in QUANTITY_ORDER if q in spec.outputs):
        reports = compare_grid(traj, quantity, spec.correction)
        name = stem or quantity.value
        if spec.out_format.wants_csv:
            written.append(
                writers.write_csv(
                    out_dir / f"{name}.csv",
                    writers.COMPARISON_HEADER,
                    writers.comparison_rows(reports),
                )
            )
        if spec.out_format.wants_svg:
            written.append(
                writers.write_svg(
                    out_dir / f"{name}.svg",
                    title or f"{quantity.value}, a={spec.a:g}, b={spec.b:g}",
                    [r.tau for r in reports],
                    writers.comparison_series(quantity, reports, spec.correction),
                )
            )
        logger.info(
            f"{quantity.value}: |numeric - asymptotic| at tau={reports[-1].tau:g} "
            f"is {reports[-1].abs_residual:.3e}"
        )
    return written
