"""Complex log-Gamma and the argument conventions used by the asymptotics.

ln Gamma is evaluated with the Stirling series after shifting the
argument to the right by the recurrence Gamma(z) = Gamma(z + 1) / z.
Summing principal logarithms of the shifted factors keeps the result
on the branch that is continuous in the right half-plane and real on
the positive axis.
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..core.entities import ComplexValue
from ..core.exceptions import NonPositiveQ2, PoleOfGamma

_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)

# Shift until Re w reaches this value; the truncated series error is then
# far below double precision.
_STIRLING_MIN_REAL = 15.0

_BERNOULLI = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
    Fraction(-3617, 510),
    Fraction(43867, 798),
    Fraction(-174611, 330),
)

# B_2k / (2k (2k - 1))
_STIRLING_COEFFS = tuple(
    float(b / ((2 * k) * (2 * k - 1))) for k, b in enumerate(_BERNOULLI, start=1)
)


@dataclass(frozen=True)
class LogGammaValue:
    value: ComplexValue

    def to_complex(self) -> complex:
        return self.value.to_complex()


def _is_gamma_pole(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


def _stirling(w: complex) -> complex:
    inv = 1.0 / w
    inv2 = inv * inv
    tail = 0j
    power = inv
    for coeff in _STIRLING_COEFFS:
        tail += coeff * power
        power *= inv2
    return (w - 0.5) * cmath.log(w) - w + _LOG_SQRT_2PI + tail


def log_gamma_complex(z: complex) -> complex:
    """ln Gamma(z) as a Python complex."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise PoleOfGamma(f"log_gamma needs a finite argument, got {z}")
    if _is_gamma_pole(z):
        raise PoleOfGamma(f"Gamma has a pole at {z.real:g}")

    shift_logs = 0j
    w = z
    while w.real < _STIRLING_MIN_REAL:
        shift_logs += cmath.log(w)
        w += 1.0
    return _stirling(w) - shift_logs


def log_gamma(z: Union[ComplexValue, complex, float]) -> LogGammaValue:
    if isinstance(z, ComplexValue):
        z = z.to_complex()
    return LogGammaValue(ComplexValue.from_complex(log_gamma_complex(z)))


def wrap_angle(angle: float) -> float:
    """Reduce an angle to the principal interval (-pi, pi]."""
    wrapped = math.remainder(angle, 2.0 * math.pi)
    if wrapped <= -math.pi:
        wrapped += 2.0 * math.pi
    return wrapped


def principal_arg_gamma(z: Union[ComplexValue, complex, float]) -> float:
    return wrap_angle(log_gamma(z).value.im)


def arg_gamma_continuous(a: float) -> float:
    """Arg Gamma(1 + ai), continuous in a with Arg Gamma(1) = 0.

    1 + ai never leaves the right half-plane, so the imaginary part of
    ln Gamma is already the continuous branch; it agrees with the
    principal argument for a in (-3 - pi/2, 0).
    """
    return log_gamma_complex(complex(1.0, a)).imag


def arg_gamma_iq2(q2: float) -> float:
    """Principal arg Gamma(i q2) for q2 > 0."""
    if not (math.isfinite(q2) and q2 > 0):
        raise NonPositiveQ2(f"q^2 must be positive, got {q2}")
    z = complex(0.0, q2)
    value = log_gamma_complex(z + 1.0) - cmath.log(z)
    return wrap_angle(value.imag)
