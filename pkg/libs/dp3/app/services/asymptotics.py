"""Large-tau closed forms for I1, I2 and ln(u/tau) on the special solution.

All o(tau^-delta) remainders are dropped. The monodromy constant of the
solution cancels in the I1 formula, so every value here depends on
(a, b, tau) only.
"""

import math
from dataclasses import dataclass

from ..core.entities import Params
from ..core.exceptions import InvalidTau, SpecialModeViolation
from .special_fns import arg_gamma_continuous, arg_gamma_iq2

_LN_2_PLUS_SQRT3 = math.log(2.0 + math.sqrt(3.0))
_LN_2 = math.log(2.0)
_LN_12 = math.log(12.0)


@dataclass(frozen=True)
class CorrectionInputs:
    x: float
    q: float
    phi0: float

    @property
    def q2(self) -> float:
        return self.q * self.q

    @property
    def amplitude(self) -> float:
        return 2.0 * self.q / math.sqrt(self.x)

    @property
    def phase(self) -> float:
        return 3.0 * self.x + self.q2 * math.log(3.0 * self.x) + self.phi0


def _require_special(params: Params) -> None:
    if not params.special:
        raise SpecialModeViolation("asymptotics are available for the special solution only")


def _require_tau(tau: float) -> None:
    if not (math.isfinite(tau) and tau > 0):
        raise InvalidTau(f"tau must be positive, got {tau}")


def _log_one_minus_exp(a: float) -> float:
    """ln(1 - e^(2 pi a)) for a < 0."""
    return math.log1p(-math.exp(2.0 * math.pi * a))


def _scaled_tau(b: float, tau: float) -> float:
    """b^(1/3) tau^(2/3)."""
    return b ** (1 / 3) * tau ** (2 / 3)


def correction_inputs(params: Params, tau: float) -> CorrectionInputs:
    _require_special(params)
    _require_tau(tau)
    a = params.a_real
    x = math.sqrt(3.0) * _scaled_tau(params.b, tau)
    q2 = -_log_one_minus_exp(a) / (2.0 * math.pi)
    # e^(2 pi a) underflows below a ~ -113; then Gamma(i q2) ~ 1/(i q2)
    # and the envelope 2q/sqrt(x) is zero.
    arg_iq2 = arg_gamma_iq2(q2) if q2 > 0 else -math.pi / 2
    phi0 = a * _LN_2_PLUS_SQRT3 + q2 * _LN_12 - math.pi / 4 - arg_iq2
    return CorrectionInputs(x=x, q=math.sqrt(q2), phi0=phi0)


def correction_amplitude(params: Params, tau: float) -> float:
    """Envelope 2q/sqrt(x) of the oscillatory correction."""
    return correction_inputs(params, tau).amplitude


def oscillatory_correction(params: Params, tau: float) -> float:
    inputs = correction_inputs(params, tau)
    if inputs.q == 0.0:
        return 0.0
    return -inputs.amplitude * math.cos(inputs.phase)


def i1_asymptotic(params: Params, tau: float) -> float:
    _require_special(params)
    _require_tau(tau)
    a, b = params.a_real, params.b
    scaled = _scaled_tau(b, tau)
    return (
        3.0 * scaled
        + 2.0 * a * math.log(scaled)
        - _LN_2_PLUS_SQRT3 / math.pi * _log_one_minus_exp(a)
        - math.pi / 2
        - 2.0 * arg_gamma_continuous(a)
    )


def re_i2_asymptotic(params: Params, tau: float) -> float:
    return params.b / 8.0 * i1_asymptotic(params, tau)


def limit_ln_u_over_tau_at_zero(params: Params) -> float:
    _require_special(params)
    return math.log(params.b) - math.log(-params.a_real) - _LN_2


def ln_u_over_tau_asymptotic(
    params: Params, tau: float, with_correction: bool = False
) -> float:
    _require_tau(tau)
    value = -2.0 / 3.0 * math.log(tau) + 2.0 / 3.0 * math.log(params.b) - _LN_2
    if with_correction:
        value += oscillatory_correction(params, tau)
    return value


def im_i2_asymptotic(params: Params, tau: float, with_correction: bool = False) -> float:
    _require_special(params)
    _require_tau(tau)
    weight = params.b / 8.0
    value = weight * (
        math.log(_scaled_tau(params.b, tau)) - math.log(-params.a_real)
    )
    if with_correction:
        value -= weight * oscillatory_correction(params, tau)
    return value


def u_asymptotic(params: Params, tau: float, with_correction: bool = False) -> float:
    """(b^(2/3)/2) tau^(1/3), times exp(correction) when requested."""
    return tau * math.exp(ln_u_over_tau_asymptotic(params, tau, with_correction))
