from typing import List, Optional, Sequence, Tuple

from ..core.entities import AsymptoticReport, AugmentedState, Params, Quantity
from . import asymptotics
from .integrator import Trajectory, sample_at


def numeric_value(state: AugmentedState, quantity: Quantity) -> float:
    """The integrated value of a quantity at one state."""
    if quantity is Quantity.SOLUTION:
        return state.point.u
    if quantity is Quantity.I1:
        return state.i1
    if quantity is Quantity.RE_I2:
        return state.i2.re
    return state.i2.im


def asymptotic_values(
    params: Params, tau: float, quantity: Quantity, correction: bool = True
) -> Tuple[float, Optional[float]]:
    """(leading, corrected) closed forms.

    corrected is None for quantities without a correction, or when none is
    requested.
    """
    if quantity is Quantity.SOLUTION:
        return (
            asymptotics.u_asymptotic(params, tau),
            asymptotics.u_asymptotic(params, tau, with_correction=True)
            if correction
            else None,
        )
    if quantity is Quantity.I1:
        return asymptotics.i1_asymptotic(params, tau), None
    if quantity is Quantity.RE_I2:
        return asymptotics.re_i2_asymptotic(params, tau), None
    return (
        asymptotics.im_i2_asymptotic(params, tau),
        asymptotics.im_i2_asymptotic(params, tau, with_correction=True)
        if correction
        else None,
    )


def report_for_state(
    params: Params, state: AugmentedState, quantity: Quantity, correction: bool
) -> AsymptoticReport:
    leading, corrected = asymptotic_values(params, state.tau, quantity, correction)
    return AsymptoticReport.build(
        tau=state.tau,
        numeric=numeric_value(state, quantity),
        leading=leading,
        corrected=corrected,
    )


def compare_at(
    traj: Trajectory, tau: float, quantity: Quantity, correction: bool = False
) -> AsymptoticReport:
    return report_for_state(traj.params, sample_at(traj, tau), quantity, correction)


def compare_grid(
    traj: Trajectory,
    quantity: Quantity,
    correction: bool = False,
    states: Optional[Sequence[AugmentedState]] = None,
) -> List[AsymptoticReport]:
    """Reports on every recorded sample (or on the given states)."""
    states = traj.samples if states is None else states
    return [report_for_state(traj.params, s, quantity, correction) for s in states]
