"""Invariant suite run by the ``selftest`` command.

Failures are collected, never raised; the report is deterministic for a
given build.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Tuple

import numpy as np

from ..core.entities import Params, make_params
from . import asymptotics
from .dynamics import (
    backlund_residual,
    f_form_residual,
    f_formula_gap,
    f_jet,
    inverse_f_to_u,
)
from .integrator import IntegratorConfig, Trajectory, dense_residual, integrate, sample_at
from .origin_series import build_series, eval_u
from .special_fns import arg_gamma_continuous, log_gamma_complex, principal_arg_gamma

logger = logging.getLogger(__name__)

SELFTEST_TAU_MAX = 20.0
SAMPLE_COUNT = 50


@dataclass(frozen=True)
class CheckResult:
    name: str
    measured: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return math.isfinite(self.measured) and self.measured <= self.tolerance

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.name} measured={self.measured:.3e} "
            f"tolerance={self.tolerance:.1e}"
        )


@dataclass(frozen=True)
class SelftestReport:
    checks: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def render(self) -> str:
        lines = [c.line() for c in self.checks]
        failed = sum(not c.passed for c in self.checks)
        lines.append(
            f"{len(self.checks) - failed}/{len(self.checks)} checks passed"
        )
        return "\n".join(lines)


def _gamma_modulus() -> float:
    worst = 0.0
    for a in np.linspace(-10.0, -0.01, 200):
        modulus2 = math.exp(2 * log_gamma_complex(complex(1.0, a)).real)
        exact = math.pi * a / math.sinh(math.pi * a)
        worst = max(worst, abs(modulus2 / exact - 1))
    return worst


def _arg_branch() -> float:
    expected = principal_arg_gamma(complex(1.0, -8.0)) - 2 * math.pi
    return abs(arg_gamma_continuous(-8.0) - expected)


def _arg_continuity() -> float:
    values = [arg_gamma_continuous(a) for a in np.linspace(0.0, -10.0, 10001)]
    return float(np.max(np.abs(np.diff(values))))


def _sample_points(traj: Trajectory, lo: float, hi: float) -> List[float]:
    hi = min(hi, traj.tau_max)
    return list(np.linspace(max(lo, traj.tau0), hi, SAMPLE_COUNT))


def _trajectory_checks(
    params: Params, cfg: IntegratorConfig, label: str, perturb_b: float
) -> List[CheckResult]:
    traj = integrate(params, cfg)
    b, a = params.b, params.a_real
    tol = 10 * cfg.rtol
    states = traj.samples

    re_gap = max(
        abs(s.i2.re - (b + perturb_b) / 8 * s.i1) / max(abs(s.i1), 1e-300)
        for s in states[1:]
    )
    log_c1 = math.log(b / (-2 * a))
    im_closed = max(
        abs(s.i2.im + b / 8 * (math.log(s.point.u / s.tau) - log_c1)) for s in states
    )
    positivity = max(0.0, -min(s.point.u for s in states))

    f_form = 0.0
    round_trip = 0.0
    formulas = 0.0
    for tau in _sample_points(traj, 0.5, SELFTEST_TAU_MAX):
        point = sample_at(traj, tau).point
        f, df, ddf = f_jet(params, point)
        f_form = max(f_form, f_form_residual(params, f, df, ddf, tau).relative)
        recovered = inverse_f_to_u(params, f, df, ddf, tau).u.to_complex()
        round_trip = max(round_trip, abs(recovered - point.u) / abs(point.u))
        formulas = max(formulas, f_formula_gap(params, point).relative)

    backlund = 0.0
    for tau in _sample_points(traj, 1.0, SELFTEST_TAU_MAX):
        point = sample_at(traj, tau).point
        for sign in (1, -1):
            backlund = max(backlund, backlund_residual(params, point, sign).relative)

    series = build_series(params, cfg.series_terms)
    handoff_tau = 2 * traj.tau0
    u_series = eval_u(series, handoff_tau)[0]
    handoff = abs(sample_at(traj, handoff_tau).point.u / u_series - 1)

    dense = max(dense_residual(traj, t) for t in traj.taus)

    return [
        CheckResult(f"{label}.re_i2_identity", re_gap, tol),
        CheckResult(f"{label}.im_i2_closed_form", im_closed, tol),
        CheckResult(f"{label}.positivity", positivity, 0.0),
        CheckResult(f"{label}.seed_c1", abs(series.coeffs[0] + b / (2 * a)), 0.0),
        CheckResult(f"{label}.series_handoff", handoff, 1e-9),
        CheckResult(f"{label}.f_form_residual", f_form, 1e-6),
        CheckResult(f"{label}.inverse_round_trip", round_trip, 1e-8),
        CheckResult(f"{label}.f_formula_agreement", formulas, 1e-12),
        CheckResult(f"{label}.backlund_residual", backlund, 1e-6),
        CheckResult(f"{label}.dense_ode_residual", dense, 1e-7),
    ]


def _asymptotic_chain(params: Params) -> float:
    worst = 0.0
    limit = asymptotics.limit_ln_u_over_tau_at_zero(params)
    for tau in (1.0, 5.0, 10.0, 40.0):
        for corrected in (False, True):
            lhs = asymptotics.im_i2_asymptotic(params, tau, corrected)
            rhs = -params.b / 8 * (
                asymptotics.ln_u_over_tau_asymptotic(params, tau, corrected) - limit
            )
            worst = max(worst, abs(lhs - rhs))
    return worst


def run_selftest(perturb_b: float = 0.0) -> SelftestReport:
    """Run every invariant; ``perturb_b`` shifts b inside the Re I2 identity."""
    checks = [
        CheckResult("gamma.modulus_identity", _gamma_modulus(), 1e-10),
        CheckResult("gamma.arg_branch_at_minus_8", _arg_branch(), 1e-10),
        CheckResult("gamma.arg_continuity", _arg_continuity(), 0.1),
    ]
    cfg = IntegratorConfig(tau_max=SELFTEST_TAU_MAX)
    presets: List[Tuple[str, Callable[[], Params]]] = [
        ("a=-8", lambda: make_params(-8.0, 0.01, 1, special=True)),
        ("a=-1/8", lambda: make_params(float(Fraction(-1, 8)), 0.01, 1, special=True)),
    ]
    for label, factory in presets:
        params = factory()
        checks.extend(_trajectory_checks(params, cfg, label, perturb_b))
        checks.append(
            CheckResult(f"{label}.asymptotic_chain", _asymptotic_chain(params), 1e-15)
        )
    report = SelftestReport(tuple(checks))
    logger.info(
        f"selftest finished: {sum(c.passed for c in checks)}/{len(checks)} passed"
    )
    return report
