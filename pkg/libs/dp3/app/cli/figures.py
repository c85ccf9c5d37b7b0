"""Preset jobs that regenerate the seven reference plots.

Figures 1-3 use a = -8, figures 4-7 use a = -1/8; b = 1/100 throughout.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List

from ..core.entities import Quantity
from ..core.exceptions import UnknownFigure
from ..services.integrator import IntegratorConfig
from .jobs import run_compare, run_solve
from .models.run_spec import OutFormat, RunSpec

logger = logging.getLogger(__name__)

FIGURE_B = 0.01
FIGURE_TAU_MAX = 40.0


@dataclass(frozen=True)
class FigurePreset:
    number: int
    a: float
    quantity: Quantity
    correction: bool
    title: str


FIGURES: Dict[int, FigurePreset] = {
    p.number: p
    for p in (
        FigurePreset(1, -8.0, Quantity.SOLUTION, False, "u(tau), a=-8, b=1/100"),
        FigurePreset(2, -8.0, Quantity.I1, False, "I1: asymptotic vs numeric, a=-8"),
        FigurePreset(3, -8.0, Quantity.IM_I2, False, "Im I2: asymptotic vs numeric, a=-8"),
        FigurePreset(4, -0.125, Quantity.SOLUTION, False, "u(tau), a=-1/8, b=1/100"),
        FigurePreset(5, -0.125, Quantity.I1, False, "I1: asymptotic vs numeric, a=-1/8"),
        FigurePreset(6, -0.125, Quantity.IM_I2, False, "Im I2 without correction, a=-1/8"),
        FigurePreset(7, -0.125, Quantity.IM_I2, True, "Im I2 with correction, a=-1/8"),
    )
}


def figure_preset(number: int) -> FigurePreset:
    try:
        return FIGURES[number]
    except KeyError:
        raise UnknownFigure(
            f"figure {number} does not exist; choose one of {sorted(FIGURES)}"
        ) from None


def figure_spec(
    number: int, cfg: IntegratorConfig, out_path: Path, out_format: OutFormat
) -> RunSpec:
    preset = figure_preset(number)
    return RunSpec(
        a=preset.a,
        b=FIGURE_B,
        cfg=cfg,
        outputs=frozenset({preset.quantity}),
        correction=preset.correction,
        out_format=out_format,
        out_path=out_path,
    )


def render_figure(
    number: int, cfg: IntegratorConfig, out_path: Path, out_format: OutFormat
) -> List[Path]:
    """Write figN.csv and/or figN.svg; top-level so a process pool can pickle it."""
    preset = figure_preset(number)
    spec = figure_spec(number, cfg, out_path, out_format)
    stem = f"fig{number}"
    logger.info(f"rendering figure {number}: {preset.title}")
    if preset.quantity is Quantity.SOLUTION:
        return run_solve(spec, stem=stem, title=preset.title)
    return run_compare(spec, stem=stem, title=preset.title)
