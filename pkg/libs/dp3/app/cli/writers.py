"""CSV tables and minimal self-contained SVG line plots.

Both writers are byte-deterministic: fixed number formatting, LF line
endings and no timestamps.
"""

import logging
import math
from pathlib import Path
from typing import List, Sequence, Tuple

import numpy as np

from ..core.entities import AsymptoticReport, Quantity
from ..core.exceptions import OutputError
from ..services.integrator import Trajectory

logger = logging.getLogger(__name__)

COMPARISON_HEADER = (
    "tau",
    "numeric",
    "asymptotic",
    "asymptotic_corrected",
    "abs_diff",
    "rel_diff",
)
SOLUTION_HEADER = ("tau", "u", "du")

_WIDTH, _HEIGHT, _MARGIN = 640, 400, 56
_COLORS = ("#1f77b4", "#d62728", "#2ca02c")


def format_number(value: float) -> str:
    return format(float(value), ".17g")


def ensure_directory(path: Path) -> Path:
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise OutputError(f"cannot create output directory {path}: {e}") from e
    return path


def _write_text(path: Path, text: str) -> Path:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as e:
        raise OutputError(f"cannot write {path}: {e}") from e
    logger.info(f"wrote {path}")
    return path


def write_csv(path: Path, header: Sequence[str], rows: Sequence[Sequence[float]]) -> Path:
    lines = [",".join(header)]
    lines.extend(",".join(format_number(v) for v in row) for row in rows)
    return _write_text(path, "\n".join(lines) + "\n")


def solution_rows(traj: Trajectory) -> List[Tuple[float, float, float]]:
    return [(s.tau, s.point.u, s.point.du) for s in traj.samples]


def comparison_rows(reports: Sequence[AsymptoticReport]) -> List[Tuple[float, ...]]:
    rows = []
    for r in reports:
        corrected = (
            r.asymptotic_leading
            if r.asymptotic_with_correction is None
            else r.asymptotic_with_correction
        )
        rows.append(
            (r.tau, r.numeric, r.asymptotic_leading, corrected, r.abs_residual, r.rel_residual)
        )
    return rows


def _nice_range(values: np.ndarray) -> Tuple[float, float]:
    lo, hi = float(np.min(values)), float(np.max(values))
    if lo == hi:
        pad = abs(lo) * 0.05 or 1.0
        return lo - pad, hi + pad
    pad = 0.05 * (hi - lo)
    return lo - pad, hi + pad


def render_svg(
    title: str,
    x: Sequence[float],
    series: Sequence[Tuple[str, Sequence[float]]],
    x_label: str = "tau",
) -> str:
    """Line plot with axes, tick labels, one polyline per series and a legend."""
    xs = np.asarray(x, dtype=float)
    ys = [np.asarray(y, dtype=float) for _, y in series]
    finite = np.concatenate([y[np.isfinite(y)] for y in ys])
    x_lo, x_hi = _nice_range(xs)
    y_lo, y_hi = _nice_range(finite if finite.size else np.zeros(1))
    inner_w = _WIDTH - 2 * _MARGIN
    inner_h = _HEIGHT - 2 * _MARGIN

    def px(v: float) -> float:
        return _MARGIN + (v - x_lo) / (x_hi - x_lo) * inner_w

    def py(v: float) -> float:
        return _HEIGHT - _MARGIN - (v - y_lo) / (y_hi - y_lo) * inner_h

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" '
        f'height="{_HEIGHT}" viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'<text x="{_WIDTH / 2:.1f}" y="20" text-anchor="middle" '
        f'font-family="sans-serif" font-size="14">{title}</text>',
        f'<rect x="{_MARGIN}" y="{_MARGIN}" width="{inner_w}" height="{inner_h}" '
        f'fill="none" stroke="black"/>',
    ]
    for k in range(5):
        xv = x_lo + (x_hi - x_lo) * k / 4
        yv = y_lo + (y_hi - y_lo) * k / 4
        out.append(
            f'<text x="{px(xv):.2f}" y="{_HEIGHT - _MARGIN + 16}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="10">{xv:.4g}</text>'
        )
        out.append(
            f'<text x="{_MARGIN - 4}" y="{py(yv) + 3:.2f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="10">{yv:.4g}</text>'
        )
    out.append(
        f'<text x="{_WIDTH / 2:.1f}" y="{_HEIGHT - 12}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12">{x_label}</text>'
    )
    for idx, ((label, _), y) in enumerate(zip(series, ys)):
        color = _COLORS[idx % len(_COLORS)]
        points = " ".join(
            f"{px(a):.2f},{py(b):.2f}" for a, b in zip(xs, y) if math.isfinite(b)
        )
        out.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.2" points="{points}"/>'
        )
        ly = _MARGIN + 14 + 16 * idx
        out.append(
            f'<line x1="{_WIDTH - _MARGIN - 150}" y1="{ly - 4}" '
            f'x2="{_WIDTH - _MARGIN - 130}" y2="{ly - 4}" stroke="{color}" stroke-width="2"/>'
        )
        out.append(
            f'<text x="{_WIDTH - _MARGIN - 124}" y="{ly}" font-family="sans-serif" '
            f'font-size="11">{label}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(
    path: Path,
    title: str,
    x: Sequence[float],
    series: Sequence[Tuple[str, Sequence[float]]],
) -> Path:
    return _write_text(path, render_svg(title, x, series))


def solution_series(traj: Trajectory) -> List[Tuple[str, Sequence[float]]]:
    return [("u numeric", [s.point.u for s in traj.samples])]


def comparison_series(
    quantity: Quantity, reports: Sequence[AsymptoticReport], correction: bool
) -> List[Tuple[str, Sequence[float]]]:
    series = [
        (f"{quantity.value} numeric", [r.numeric for r in reports]),
        (f"{quantity.value} asymptotic", [r.asymptotic_leading for r in reports]),
    ]
    if correction and reports and reports[0].asymptotic_with_correction is not None:
        series.append(
            (
                f"{quantity.value} corrected",
                [r.asymptotic_with_correction for r in reports],
            )
        )
    return series
