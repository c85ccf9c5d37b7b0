"""Adaptive integration of the special solution together with both integrals.

The state vector is (u, u', I1, Re I2, Im I2). It is seeded from the origin
series at a small tau0 and advanced with the Dormand-Prince 5(4) pair; each
accepted step keeps the coefficients of the 4th-order continuous extension
so the trajectory can be sampled anywhere in [tau0, tau_max].
"""

import logging
import math
import time
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..config import config
from ..core.entities import AugmentedState, ComplexValue, Params, SolutionPoint
from ..core.exceptions import (
    NumericalError,
    OutOfRange,
    PoleEncountered,
    SpecialModeViolation,
    StepLimitExceeded,
    StepUnderflow,
    ZeroCrossing,
)
from .dynamics import augmented_field, ode_residual
from .origin_series import build_series, seed_state, select_handoff_tau

logger = logging.getLogger(__name__)

# Dormand-Prince 5(4) tableau
_C = np.array([0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0])
_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
    (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
)
_B = np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0])
# b - b_hat
_E = np.array(
    [71 / 57600, 0.0, -71 / 16695, 71 / 1920, -17253 / 339200, 22 / 525, -1 / 40]
)
# continuous extension
_D = np.array(
    [
        -12715105075 / 11282082432,
        0.0,
        87487479700 / 32700410799,
        -10690763975 / 1880347072,
        701980252875 / 199316789632,
        -1453857185 / 822651844,
        69997945 / 29380423,
    ]
)

_SAFETY = 0.9
_FAC_MIN = 0.2
_FAC_MAX = 10.0
_STATE_SIZE = 5


class IntegratorConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    rtol: float = Field(config.RTOL, gt=0, description="Relative tolerance per step")
    atol: float = Field(config.ATOL, gt=0, description="Absolute tolerance per step")
    tau0: float = Field(config.TAU0, gt=0, description="Series handoff point")
    tau_max: float = Field(config.TAU_MAX, gt=0, description="End of integration")
    max_step: float = Field(config.MAX_STEP, gt=0, description="Upper step bound")
    dense_output_stride: float = Field(
        config.STRIDE, gt=0, description="Spacing of the recorded sample grid"
    )
    pole_guard: float = Field(config.POLE_GUARD, gt=0, description="|u| threshold")
    series_terms: int = Field(config.SERIES_TERMS, ge=2)
    max_steps: int = Field(config.MAX_STEPS, ge=1)

    @model_validator(mode="after")
    def check_interval(self):
        if not self.tau0 < self.tau_max:
            raise ValueError(f"tau0={self.tau0} must be smaller than tau_max={self.tau_max}")
        return self

    def step_cap(self, tau: float) -> float:
        """Largest admissible step at tau: min(max_step, 0.25 tau^(1/3))."""
        return min(self.max_step, 0.25 * tau ** (1 / 3))


@dataclass(frozen=True)
class IntegrationDiagnostics:
    steps: int
    rejected_steps: int
    function_evaluations: int
    max_residual: float
    tau0: float
    elapsed_seconds: float


@dataclass(frozen=True)
class Trajectory:
    """Integrated special solution with dense output.

    ``samples`` are AugmentedStates on the stride grid; ``segments`` hold
    per-step (tau_start, h) and ``coefficients`` the five continuous
    extension vectors of every accepted step.
    """

    params: Params
    samples: Tuple[AugmentedState, ...]
    diagnostics: IntegrationDiagnostics
    segments: np.ndarray
    coefficients: np.ndarray

    @property
    def tau0(self) -> float:
        return float(self.segments[0, 0])

    @property
    def tau_max(self) -> float:
        return float(self.segments[-1, 0] + self.segments[-1, 1])

    @property
    def taus(self) -> np.ndarray:
        return np.array([s.tau for s in self.samples])

    def arrays(self) -> np.ndarray:
        """Samples as an (n, 6) array: tau, u, u', I1, Re I2, Im I2."""
        return np.array(
            [
                [s.tau, s.point.u, s.point.du, s.i1, s.i2.re, s.i2.im]
                for s in self.samples
            ]
        )

    def evaluate(self, taus: Sequence[float]) -> np.ndarray:
        """Dense-output state vectors, shape (len(taus), 5)."""
        taus = np.atleast_1d(np.asarray(taus, dtype=float))
        return np.array([_dense_value(self, t)[0] for t in taus])


def _locate(traj: Trajectory, tau: float) -> int:
    # start + h of the last segment may round one ulp below the requested end
    slack = 4 * np.finfo(float).eps * traj.tau_max
    if not traj.tau0 <= tau <= traj.tau_max + slack:
        raise OutOfRange(
            f"tau={tau} outside the integrated range [{traj.tau0}, {traj.tau_max}]"
        )
    index = int(np.searchsorted(traj.segments[:, 0], tau, side="right")) - 1
    return min(max(index, 0), len(traj.segments) - 1)


def _dense_value(traj: Trajectory, tau: float) -> Tuple[np.ndarray, np.ndarray]:
    """State and its tau-derivative from the continuous extension."""
    index = _locate(traj, tau)
    start, h = traj.segments[index]
    r1, r2, r3, r4, r5 = traj.coefficients[index]
    theta = (tau - start) / h
    inner = r3 + theta * (r4 + (1 - theta) * r5)
    outer = r2 + (1 - theta) * inner
    value = r1 + theta * outer
    d_inner = r4 + (1 - 2 * theta) * r5
    d_outer = -inner + (1 - theta) * d_inner
    return value, (outer + theta * d_outer) / h


def _to_state(tau: float, y: np.ndarray) -> AugmentedState:
    return AugmentedState(
        point=SolutionPoint(tau, y[0], y[1]),
        i1=y[2],
        i2=ComplexValue(y[3], y[4]),
    )


def sample_at(traj: Trajectory, tau: float) -> AugmentedState:
    value, _ = _dense_value(traj, tau)
    return _to_state(tau, value)


def dense_residual(traj: Trajectory, tau: float) -> float:
    """Relative residual of the equation on the dense output at tau."""
    value, derivative = _dense_value(traj, tau)
    p = traj.params
    residual = ode_residual(
        tau, value[0], value[1], derivative[1], p.a_real, p.b, int(p.epsilon)
    )
    return residual.relative


def _sample_grid(tau0: float, tau_max: float, stride: float) -> np.ndarray:
    first = math.floor(tau0 / stride) + 1
    last = math.ceil(tau_max / stride) - 1
    interior = stride * np.arange(first, last + 1)
    interior = interior[(interior > tau0) & (interior < tau_max)]
    return np.concatenate(([tau0], interior, [tau_max]))


def _error_norm(
    error: np.ndarray, y0: np.ndarray, y1: np.ndarray, rtol: float, atol: float
) -> float:
    scale = atol + rtol * np.maximum(np.abs(y0), np.abs(y1))
    return float(np.sqrt(np.mean((error / scale) ** 2)))


def integrate(params: Params, cfg: Optional[IntegratorConfig] = None) -> Trajectory:
    if not params.special:
        raise SpecialModeViolation("integration is defined for the special solution only")
    cfg = cfg or IntegratorConfig()
    started = time.perf_counter()

    series = build_series(params, cfg.series_terms)
    tau0 = select_handoff_tau(series, cfg.tau0)
    seed = seed_state(series, tau0)
    field = augmented_field(params)

    tau = tau0
    y = np.array([seed.point.u, seed.point.du, seed.i1, seed.i2.re, seed.i2.im])
    compensation = np.zeros(_STATE_SIZE)
    k1 = field(tau, y)
    evaluations = 1
    h = min(cfg.step_cap(tau), 0.01 * tau0)

    starts: List[Tuple[float, float]] = []
    coefficients: List[np.ndarray] = []
    rejected = 0
    previous_rejected = False

    logger.info(
        f"Integrating a={params.a} b={params.b} from tau0={tau0:.6g} "
        f"to tau_max={cfg.tau_max} (rtol={cfg.rtol}, atol={cfg.atol})"
    )

    while tau < cfg.tau_max:
        if len(starts) >= cfg.max_steps:
            raise StepLimitExceeded(
                f"more than {cfg.max_steps} steps before tau_max; stopped at tau={tau}"
            )
        h = min(h, cfg.step_cap(tau))
        # stretch by up to 1% rather than leave a sliver before tau_max
        last_step = tau + 1.01 * h >= cfg.tau_max
        if last_step:
            h = cfg.tau_max - tau
        if h <= 16 * np.finfo(float).eps * abs(tau):
            raise StepUnderflow(f"step size underflow at tau={tau} (h={h:.3e})")

        stages = [k1]
        try:
            for i in range(1, 7):
                increment = sum(coef * k for coef, k in zip(_A[i], stages))
                stages.append(field(tau + _C[i] * h, y + h * increment))
            evaluations += 6
            k = np.array(stages)
            y_trial = y + h * (_B @ k)
            err = _error_norm(h * (_E @ k), y, y_trial, cfg.rtol, cfg.atol)
        except (NumericalError, FloatingPointError):
            err = math.inf
        if not math.isfinite(err):
            err = math.inf

        if err > 1.0:
            rejected += 1
            factor = _FAC_MIN if not math.isfinite(err) else max(
                _FAC_MIN, _SAFETY * err ** (-0.2)
            )
            logger.debug(f"step rejected at tau={tau:.6g}, h={h:.3e}, err={err:.3e}")
            h *= factor
            previous_rejected = True
            continue

        # compensated accumulation of the accepted increment
        correction = h * (_B @ k) - compensation
        y_new = y + correction
        compensation = (y_new - y) - correction
        tau_new = cfg.tau_max if last_step else tau + h

        if abs(y_new[0]) > cfg.pole_guard:
            raise PoleEncountered(
                f"|u|={abs(y_new[0]):.3e} exceeds the pole guard near tau={tau_new}"
            )
        if y_new[0] <= 0:
            raise ZeroCrossing(f"u changed sign between tau={tau} and tau={tau_new}")

        k7 = stages[6]
        diff = y_new - y
        bspl = h * k1 - diff
        coefficients.append(
            np.array([y, diff, bspl, diff - h * k7 - bspl, h * (_D @ k)])
        )
        starts.append((tau, h))

        tau, y, k1 = tau_new, y_new, k7
        factor = min(_FAC_MAX, max(_FAC_MIN, _SAFETY * max(err, 1e-10) ** (-0.2)))
        if previous_rejected:
            factor = min(factor, 1.0)
        previous_rejected = False
        h *= factor

    segments = np.array(starts)
    coefficient_array = np.array(coefficients)
    grid = _sample_grid(tau0, cfg.tau_max, cfg.dense_output_stride)

    partial = Trajectory(
        params=params,
        samples=(),
        diagnostics=IntegrationDiagnostics(0, 0, 0, 0.0, tau0, 0.0),
        segments=segments,
        coefficients=coefficient_array,
    )
    samples = [seed] + [sample_at(partial, t) for t in grid[1:]]
    max_residual = max(dense_residual(partial, t) for t in grid)
    elapsed = time.perf_counter() - started

    diagnostics = IntegrationDiagnostics(
        steps=len(starts),
        rejected_steps=rejected,
        function_evaluations=evaluations,
        max_residual=max_residual,
        tau0=tau0,
        elapsed_seconds=elapsed,
    )
    logger.info(
        f"Integration finished: {diagnostics.steps} steps, "
        f"{diagnostics.rejected_steps} rejected, max residual "
        f"{diagnostics.max_residual:.3e}, {elapsed:.2f}s"
    )
    return Trajectory(
        params=params,
        samples=tuple(samples),
        diagnostics=diagnostics,
        segments=segments,
        coefficients=coefficient_array,
    )
