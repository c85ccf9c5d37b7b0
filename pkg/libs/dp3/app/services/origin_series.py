"""Taylor data of the odd solution at the singular point tau = 0.

Multiplying the equation by tau*u clears both denominators:

    tau u u'' - tau (u')^2 + u u' + 8 eps u^3 - 2ab u - tau b^2 = 0.

For u = sum c_k tau^k (odd k) the first three terms combine into
sum_{i,j} c_i c_j (i - j)^2 / 2 tau^(i+j-1), so the coefficient of tau^n gives

    c_n (c_1 (n-1)^2 - 2ab) = -[ sum_{i+j=n+1, 1<i,j<n} c_i c_j (i-j)^2/2
                                 + 8 eps sum_{i+j+k=n} c_i c_j c_k ]

with c_1 = -b/(2a) from the tau^1 balance. The bracket on the left never
vanishes for real a, so every coefficient is determined.
"""

import logging
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from ..config import config
from ..core.entities import AugmentedState, ComplexValue, Params, SolutionPoint
from ..core.exceptions import InvalidSeriesOrder, OutsideRadius, SpecialModeViolation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OriginSeries:
    """Odd Taylor coefficients c_1, c_3, ..., c_{2N+1} of u at tau = 0."""

    a: float
    b: float
    coeffs: Tuple[float, ...]
    n_terms: int
    radius_estimate: float
    epsilon: int = 1

    @property
    def dense(self) -> np.ndarray:
        """Coefficients in ascending powers of tau, even slots zero."""
        full = np.zeros(2 * len(self.coeffs))
        full[1::2] = self.coeffs
        return full

    @property
    def reduced(self) -> np.ndarray:
        """Coefficients of u/tau as a series in tau^2."""
        return np.asarray(self.coeffs)


def _radius_from_ratios(coeffs: np.ndarray) -> float:
    ratios = [
        abs(coeffs[k] / coeffs[k + 1])
        for k in range(len(coeffs) - 1)
        if coeffs[k + 1] != 0.0
    ]
    if not ratios:
        return math.inf
    # ratio test in tau^2; the last few ratios are the most representative
    return math.sqrt(min(ratios[-3:]))


def build_series(params: Params, n_terms: int = config.SERIES_TERMS) -> OriginSeries:
    if not params.special:
        raise SpecialModeViolation("the origin series exists for the special solution only")
    if n_terms < 2:
        raise InvalidSeriesOrder(f"n_terms must be at least 2, got {n_terms}")

    a, b, eps = params.a_real, params.b, int(params.epsilon)
    degree = 2 * n_terms + 1
    c = np.zeros(degree + 1)
    c[1] = -b / (2 * a)

    for n in range(3, degree + 1, 2):
        quadratic = 0.0
        for i in range(3, n - 1, 2):
            j = n + 1 - i
            quadratic += c[i] * c[j] * (i - j) ** 2 / 2
        cubic = np.convolve(np.convolve(c, c), c)[n]
        c[n] = -(quadratic + 8 * eps * cubic) / (c[1] * (n - 1) ** 2 - 2 * a * b)

    odd = c[1::2]
    radius = _radius_from_ratios(odd)
    logger.debug(
        f"origin series a={a} b={b}: {len(odd)} coefficients, radius ~ {radius:.4g}"
    )
    return OriginSeries(
        a=a,
        b=b,
        coeffs=tuple(float(x) for x in odd),
        n_terms=n_terms,
        radius_estimate=radius,
        epsilon=eps,
    )


def _check_radius(series: OriginSeries, tau: float) -> None:
    if abs(tau) > series.radius_estimate:
        raise OutsideRadius(
            f"|tau|={abs(tau)} exceeds the series radius estimate "
            f"{series.radius_estimate:.4g}"
        )


def eval_u(series: OriginSeries, tau: float) -> Tuple[float, float]:
    """(u, u') from the truncated series."""
    _check_radius(series, tau)
    full = series.dense
    return float(P.polyval(tau, full)), float(P.polyval(tau, P.polyder(full)))


def eval_jet(series: OriginSeries, tau: float) -> Tuple[float, float, float]:
    """(u, u', u'') from the truncated series."""
    _check_radius(series, tau)
    full = series.dense
    d1 = P.polyder(full)
    return (
        float(P.polyval(tau, full)),
        float(P.polyval(tau, d1)),
        float(P.polyval(tau, P.polyder(d1))),
    )


def _reciprocal(w: np.ndarray) -> np.ndarray:
    """Coefficients of 1/w for a power series w with w[0] != 0."""
    d = np.zeros_like(w)
    d[0] = 1.0 / w[0]
    for k in range(1, len(w)):
        d[k] = -np.dot(w[1 : k + 1], d[k - 1 :: -1][:k]) / w[0]
    return d


def integrand_series(series: OriginSeries) -> Tuple[np.ndarray, np.ndarray]:
    """Series of phi' and of (ln(u/tau))', both odd in tau.

    Returned as coefficient arrays e with integrand = sum_k e[k] tau^(2k-1),
    k >= 1 (e[0] is the would-be 1/tau coefficient and is zero).
    """
    w = series.reduced
    d = _reciprocal(w)
    # 2a/tau + b/u = (2a + b d_0)/tau + b sum_{k>=1} d_k tau^(2k-1); b d_0 = -2a
    phi = series.b * d
    phi[0] = 2 * series.a + series.b * d[0]
    # (u/tau)'/(u/tau) with (u/tau)' = sum_k 2k w_k tau^(2k-1)
    dw = 2 * np.arange(len(w)) * w
    log_rate = np.array(
        [np.dot(dw[1 : k + 1], d[k - 1 :: -1][:k]) if k else 0.0 for k in range(len(w))]
    )
    return phi, log_rate


def _integrate_odd(coeffs: np.ndarray, tau0: float) -> float:
    k = np.arange(1, len(coeffs))
    return float(np.sum(coeffs[1:] * tau0 ** (2 * k) / (2 * k)))


def eval_integrals(series: OriginSeries, tau0: float) -> Tuple[float, ComplexValue]:
    """I1(tau0) and I2(tau0) by term-by-term integration."""
    if tau0 < 0:
        raise OutsideRadius(f"tau0 must be non-negative, got {tau0}")
    _check_radius(series, tau0)
    if tau0 == 0:
        return 0.0, ComplexValue(0.0, 0.0)
    phi, log_rate = integrand_series(series)
    weight = series.epsilon * series.b / 8
    i1 = _integrate_odd(phi, tau0)
    im_i2 = -weight * _integrate_odd(log_rate, tau0)
    return i1, ComplexValue(weight * i1, im_i2)


def select_handoff_tau(
    series: OriginSeries,
    tau0: float = config.TAU0,
    rel_tol: float = config.HANDOFF_REL_TOL,
) -> float:
    """Halve tau0 until the last retained term is negligible."""
    tau = min(tau0, 0.5 * series.radius_estimate)
    last = abs(series.coeffs[-1])
    while True:
        u = abs(eval_u(series, tau)[0])
        if last * tau ** (2 * len(series.coeffs) - 1) <= rel_tol * u:
            break
        tau *= 0.5
    if tau != tau0:
        logger.info(f"handoff moved from tau0={tau0} to tau0={tau:.6g}")
    return tau


def seed_state(series: OriginSeries, tau0: float) -> AugmentedState:
    u, du = eval_u(series, tau0)
    i1, i2 = eval_integrals(series, tau0)
    return AugmentedState(point=SolutionPoint(tau0, u, du), i1=i1, i2=i2)
