import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Union

from .exceptions import (
    InvalidB,
    InvalidState,
    NonFiniteValue,
    NonRealA,
    ParameterError,
    SpecialModeViolation,
)


class Sign(int, Enum):
    """The sign epsilon in front of the cubic term."""

    PLUS = 1
    MINUS = -1


class Quantity(str, Enum):
    """Quantities that can be integrated, compared and plotted."""

    SOLUTION = "solution"
    I1 = "i1"
    RE_I2 = "re_i2"
    IM_I2 = "im_i2"


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise NonFiniteValue(f"{name} must be finite, got {value}")
    return value


@dataclass(frozen=True)
class ComplexValue:
    re: float
    im: float

    def __post_init__(self):
        object.__setattr__(self, "re", _require_finite("re", self.re))
        object.__setattr__(self, "im", _require_finite("im", self.im))

    @classmethod
    def from_complex(cls, z: complex) -> "ComplexValue":
        z = complex(z)
        return cls(z.real, z.imag)

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    def conjugate(self) -> "ComplexValue":
        return ComplexValue(self.re, -self.im)

    def __abs__(self) -> float:
        return abs(self.to_complex())


@dataclass(frozen=True)
class Params:
    """Parameters (a, b, epsilon) of one instance of the equation.

    In special-solution mode ``a`` is a real float with a < 0 and
    epsilon = +1. Otherwise ``a`` is kept as a ComplexValue, since the
    transform layer works with shifted parameters a +/- i.
    """

    a: Union[float, ComplexValue]
    b: float
    epsilon: Sign = Sign.PLUS
    special: bool = False

    def __post_init__(self):
        b = _require_finite("b", self.b)
        if b <= 0:
            raise InvalidB(f"b must be positive, got {b}")
        object.__setattr__(self, "b", b)

        if self.epsilon not in (1, -1):
            raise ParameterError(f"epsilon must be +1 or -1, got {self.epsilon}")
        object.__setattr__(self, "epsilon", Sign(int(self.epsilon)))

        a = self.a
        if not isinstance(a, ComplexValue):
            a = ComplexValue.from_complex(a)

        if self.special:
            if a.im != 0.0:
                raise NonRealA(f"special solution requires real a, got {a}")
            if a.re >= 0:
                raise SpecialModeViolation(
                    f"special solution requires a < 0, got a={a.re}"
                )
            if self.epsilon is not Sign.PLUS:
                raise SpecialModeViolation("special solution requires epsilon = +1")
            object.__setattr__(self, "a", a.re)
        else:
            object.__setattr__(self, "a", a)

    @property
    def a_complex(self) -> complex:
        if isinstance(self.a, ComplexValue):
            return self.a.to_complex()
        return complex(self.a)

    @property
    def a_real(self) -> float:
        """The parameter a as a float; fails for genuinely complex a."""
        z = self.a_complex
        if z.imag != 0.0:
            raise NonRealA(f"a is not real: {z}")
        return z.real

    @property
    def is_real(self) -> bool:
        return self.a_complex.imag == 0.0

    @property
    def a_plus(self) -> complex:
        return self.a_complex + 1j

    @property
    def a_minus(self) -> complex:
        return self.a_complex - 1j

    def shifted(self, delta: complex) -> "Params":
        """General-mode copy with a replaced by a + delta."""
        return Params(
            a=ComplexValue.from_complex(self.a_complex + delta),
            b=self.b,
            epsilon=self.epsilon,
        )


def make_params(
    a: Union[float, complex, ComplexValue],
    b: float,
    epsilon: int = 1,
    special: bool = False,
) -> Params:
    return Params(a=a, b=b, epsilon=epsilon, special=special)


@dataclass(frozen=True)
class SolutionPoint:
    tau: float
    u: float
    du: float

    def __post_init__(self):
        tau = _require_finite("tau", self.tau)
        if tau <= 0:
            raise InvalidState(f"tau must be positive, got {tau}")
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "u", _require_finite("u", self.u))
        object.__setattr__(self, "du", _require_finite("du", self.du))


@dataclass(frozen=True)
class AugmentedState:
    """Phase point extended with the running values of both integrals.

    ``i1`` is the integral of 2a/t + b/u over [0, tau]; ``i2`` the
    integral of f(t)/t over the same segment.
    """

    point: SolutionPoint
    i1: float
    i2: ComplexValue

    def __post_init__(self):
        object.__setattr__(self, "i1", _require_finite("i1", self.i1))

    @property
    def tau(self) -> float:
        return self.point.tau

    def re_identity_gap(self, b: float) -> float:
        """Re I2 - (b/8) I1, zero for any exact state."""
        return self.i2.re - b / 8.0 * self.i1


@dataclass(frozen=True)
class AsymptoticReport:
    tau: float
    numeric: float
    asymptotic_leading: float
    asymptotic_with_correction: Optional[float] = None
    abs_residual: float = field(init=False)
    rel_residual: float = field(init=False)

    def __post_init__(self):
        reference = (
            self.asymptotic_with_correction
            if self.asymptotic_with_correction is not None
            else self.asymptotic_leading
        )
        diff = abs(self.numeric - reference)
        scale = max(abs(self.numeric), abs(reference))
        object.__setattr__(self, "abs_residual", diff)
        object.__setattr__(self, "rel_residual", diff / scale if scale > 0 else 0.0)

    @classmethod
    def build(
        cls,
        tau: float,
        numeric: float,
        leading: float,
        corrected: Optional[float] = None,
    ) -> "AsymptoticReport":
        return cls(
            tau=tau,
            numeric=numeric,
            asymptotic_leading=leading,
            asymptotic_with_correction=corrected,
        )
