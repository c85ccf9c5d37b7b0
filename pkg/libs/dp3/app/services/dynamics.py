"""Vector field of the degenerate third Painleve equation and its transforms.

The equation reads

    u'' = (u')^2/u - u'/tau + (-8 eps u^2 + 2ab)/tau + b^2/u.

Everything here works on single phase points. Derivatives of the
transformed functions are exact: u'' and u''' are eliminated through the
equation itself, never estimated by finite differences.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Tuple, Union

import numpy as np

from ..core.entities import ComplexValue, Params, SolutionPoint
from ..core.exceptions import DegenerateDenominator, ZeroTau, ZeroU

logger = logging.getLogger(__name__)

Number = Union[float, complex]

# Agreement demanded between the two defining formulas of f, relative to
# the largest term of the log-derivative bracket.
F_FORMULA_TOLERANCE = 1e-12


@dataclass(frozen=True)
class Residual:
    """Absolute residual of an identity and the size of its largest term."""

    absolute: float
    scale: float

    @property
    def relative(self) -> float:
        if self.scale == 0.0:
            return self.absolute
        return self.absolute / self.scale


@dataclass(frozen=True)
class TransformedPoint:
    u_plus: ComplexValue
    u_minus: ComplexValue
    f: ComplexValue
    df: ComplexValue
    ddf: ComplexValue


@dataclass(frozen=True)
class FInverse:
    """Solution recovered from (f, f', f''), with its forward transform."""

    u: ComplexValue
    u_plus: ComplexValue


def _check_point(tau: Number, u: Number) -> None:
    if tau == 0:
        raise ZeroTau("the equation is singular at tau = 0")
    if u == 0:
        raise ZeroU("the vector field is singular at u = 0")


def second_derivative(
    tau: Number, u: Number, du: Number, a: Number, b: float, epsilon: int
) -> Number:
    _check_point(tau, u)
    return (
        du * du / u - du / tau + (-8 * epsilon * u * u + 2 * a * b) / tau + b * b / u
    )


def third_derivative(
    tau: Number,
    u: Number,
    du: Number,
    ddu: Number,
    a: Number,
    b: float,
    epsilon: int,
) -> Number:
    """u''' obtained by differentiating the right-hand side along the flow."""
    _check_point(tau, u)
    d_tau = du / tau**2 - (-8 * epsilon * u * u + 2 * a * b) / tau**2
    d_u = -du * du / (u * u) - 16 * epsilon * u / tau - b * b / (u * u)
    d_du = 2 * du / u - 1 / tau
    return d_tau + d_u * du + d_du * ddu


def ode_residual(
    tau: Number,
    u: Number,
    du: Number,
    ddu: Number,
    a: Number,
    b: float,
    epsilon: int,
) -> Residual:
    """Residual of the equation for arbitrary (possibly complex) data."""
    _check_point(tau, u)
    terms = (
        ddu,
        du * du / u,
        du / tau,
        8 * epsilon * u * u / tau,
        2 * a * b / tau,
        b * b / u,
    )
    value = ddu - (terms[1] - terms[2] - terms[3] + terms[4] + terms[5])
    return Residual(abs(value), max(abs(t) for t in terms))


def rhs(params: Params, point: SolutionPoint) -> Tuple[float, float]:
    """Return (u', u'') at a real phase point."""
    ddu = second_derivative(
        point.tau, point.u, point.du, params.a_real, params.b, params.epsilon
    )
    return point.du, float(ddu)


def phi_derivative(params: Params, point: SolutionPoint) -> float:
    """phi' = 2a/tau + b/u, the integrand of I1."""
    _check_point(point.tau, point.u)
    return 2 * params.a_real / point.tau + params.b / point.u


def backlund_jet(
    params: Params, point: SolutionPoint, sign: int = 1
) -> Tuple[complex, complex, complex]:
    """u_+ (sign=+1) or u_- (sign=-1) together with its first two derivatives.

    With h = tau(-sign u' - ib) - (2ai - sign) u the transform is
    u_sign = (i eps b / 8) h / u^2.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    tau, u, du = point.tau, point.u, point.du
    a, b, eps = params.a_complex, params.b, int(params.epsilon)

    ddu = second_derivative(tau, u, du, a, b, eps)
    dddu = third_derivative(tau, u, du, ddu, a, b, eps)

    k = 1j * eps * b / 8
    shift = 2j * a - sign
    h = tau * (-sign * du - 1j * b) - shift * u
    dh = -sign * du - 1j * b - sign * tau * ddu - shift * du
    ddh = -2 * sign * ddu - sign * tau * dddu - shift * ddu

    u2 = u * u
    u3 = u2 * u
    w = k * h / u2
    dw = k * (dh / u2 - 2 * h * du / u3)
    ddw = k * (
        ddh / u2 - 4 * dh * du / u3 - 2 * h * ddu / u3 + 6 * h * du * du / (u3 * u)
    )
    return w, dw, ddw


def backlund_plus(params: Params, point: SolutionPoint) -> ComplexValue:
    """u_+, a solution of the equation with a replaced by a + i."""
    return ComplexValue.from_complex(backlund_jet(params, point, 1)[0])


def backlund_minus(params: Params, point: SolutionPoint) -> ComplexValue:
    """u_-, a solution of the equation with a replaced by a - i."""
    return ComplexValue.from_complex(backlund_jet(params, point, -1)[0])


def backlund_residual(params: Params, point: SolutionPoint, sign: int = 1) -> Residual:
    """Residual of u_+ (u_-) in the equation with parameter a + i (a - i)."""
    w, dw, ddw = backlund_jet(params, point, sign)
    shifted_a = params.a_complex + sign * 1j
    return ode_residual(
        point.tau, w, dw, ddw, shifted_a, params.b, int(params.epsilon)
    )


def f_jet(params: Params, point: SolutionPoint) -> Tuple[complex, complex, complex]:
    """(f, f', f'') for f = u_+ u."""
    w, dw, ddw = backlund_jet(params, point, 1)
    u, du = point.u, point.du
    ddu = second_derivative(
        point.tau, u, du, params.a_complex, params.b, int(params.epsilon)
    )
    return w * u, dw * u + w * du, ddw * u + 2 * dw * du + w * ddu


def f_value_log_derivative(params: Params, point: SolutionPoint) -> complex:
    """f = -tau (i eps b/8)(u'/u - 1/tau + i(2a/tau + b/u))."""
    _check_point(point.tau, point.u)
    tau, u, du = point.tau, point.u, point.du
    a, b, eps = params.a_complex, params.b, int(params.epsilon)
    bracket = du / u - 1 / tau + 1j * (2 * a / tau + b / u)
    return -tau * (1j * eps * b / 8) * bracket


def f_formula_gap(params: Params, point: SolutionPoint) -> Residual:
    """Gap between u_+ u and the log-derivative formula of f.

    Near the origin the bracket terms cancel down to O(tau), so the gap is scaled
    by the largest of them rather than by |f|.
    """
    w, _, _ = backlund_jet(params, point, 1)
    product = w * point.u
    other = f_value_log_derivative(params, point)
    tau, u, du = point.tau, point.u, point.du
    largest = max(
        abs(du / u), 1 / abs(tau), abs(2 * params.a_complex / tau), params.b / abs(u)
    )
    scale = max(abs(product), abs(other), params.b / 8 * abs(tau) * largest)
    return Residual(abs(product - other), scale)


def f_value(params: Params, point: SolutionPoint) -> ComplexValue:
    w, _, _ = backlund_jet(params, point, 1)
    gap = f_formula_gap(params, point)
    if gap.relative > F_FORMULA_TOLERANCE:
        logger.warning(
            f"f formulas disagree at tau={point.tau}: relative gap {gap.relative:.3e}"
        )
    return ComplexValue.from_complex(w * point.u)


def companion_f_minus(params: Params, point: SolutionPoint) -> ComplexValue:
    """i eps b u u_- / 2, the f-function in the alternative normalisation."""
    w_minus = backlund_jet(params, point, -1)[0]
    eps = int(params.epsilon)
    return ComplexValue.from_complex(1j * eps * params.b * point.u * w_minus / 2)


def transform_point(params: Params, point: SolutionPoint) -> TransformedPoint:
    f, df, ddf = f_jet(params, point)
    return TransformedPoint(
        u_plus=backlund_plus(params, point),
        u_minus=backlund_minus(params, point),
        f=ComplexValue.from_complex(f),
        df=ComplexValue.from_complex(df),
        ddf=ComplexValue.from_complex(ddf),
    )


def _as_complex(value: Union[ComplexValue, Number]) -> complex:
    if isinstance(value, ComplexValue):
        return value.to_complex()
    return complex(value)


def f_form_residual(
    params: Params,
    f: Union[ComplexValue, Number],
    df: Union[ComplexValue, Number],
    ddf: Union[ComplexValue, Number],
    tau: float,
) -> Residual:
    """Both summands of the f-form equation, combined into a Residual."""
    if tau <= 0:
        raise ZeroTau(f"tau must be positive, got {tau}")
    f, df, ddf = _as_complex(f), _as_complex(df), _as_complex(ddf)
    a, b, eps = params.a_complex, params.b, int(params.epsilon)
    first = b * b * tau * tau * (ddf - 2 * b * b) ** 2
    second = (8 * f + 1j * eps * b * (2j * a - 1)) ** 2 * (df * df - 4 * b * b * f)
    return Residual(abs(first + second), max(abs(first), abs(second)))


def residual_f_form(
    params: Params,
    f: Union[ComplexValue, Number],
    df: Union[ComplexValue, Number],
    ddf: Union[ComplexValue, Number],
    tau: float,
) -> float:
    return f_form_residual(params, f, df, ddf, tau).absolute


def inverse_f_to_u(
    params: Params,
    f: Union[ComplexValue, Number],
    df: Union[ComplexValue, Number],
    ddf: Union[ComplexValue, Number],
    tau: float,
) -> FInverse:
    """Recover u (and u_+ = u - f'/(ib)) from a solution of the f-form."""
    f, df, ddf = _as_complex(f), _as_complex(df), _as_complex(ddf)
    a, b, eps = params.a_complex, params.b, int(params.epsilon)
    constant = 1j * eps * b * (2j * a - 1)
    denominator = 8 * f + constant
    if abs(denominator) <= np.finfo(float).eps * (8 * abs(f) + abs(constant)):
        raise DegenerateDenominator(
            f"8f + i eps b(2ai - 1) vanishes at tau={tau}; u is not recoverable"
        )
    u = df / (2j * b) - eps * tau * (ddf - 2 * b * b) / (2 * denominator)
    u_plus = u - df / (1j * b)
    return FInverse(
        u=ComplexValue.from_complex(u), u_plus=ComplexValue.from_complex(u_plus)
    )


def augmented_field(params: Params) -> Callable[[float, np.ndarray], np.ndarray]:
    """Right-hand side of the system (u, u', I1, Re I2, Im I2)'.

    Re f/tau = (eps b/8) phi' and Im f/tau = -(eps b/8)(u'/u - 1/tau), the
    real and imaginary parts of the log-derivative form of f.
    """
    a, b, eps = params.a_real, params.b, int(params.epsilon)
    two_ab = 2 * a * b
    two_a = 2 * a
    b2 = b * b
    weight = eps * b / 8

    def field(tau: float, y: np.ndarray) -> np.ndarray:
        u, du = y[0], y[1]
        if u == 0:
            raise ZeroU(f"u vanished at tau={tau}")
        log_rate = du / u - 1 / tau
        phi_rate = two_a / tau + b / u
        ddu = du * log_rate + (-8 * eps * u * u + two_ab) / tau + b2 / u
        return np.array([du, ddu, phi_rate, weight * phi_rate, -weight * log_rate])

    return field
