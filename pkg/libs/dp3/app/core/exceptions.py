"""Error hierarchy shared by the library and the command line.

Every error carries the process exit code the CLI reports for it.
"""


class DP3Error(Exception):
    """Base class for all library errors."""

    exit_code = 1


class ParameterError(DP3Error, ValueError):
    """Invalid input: parameters, ranges or requested outputs."""

    exit_code = 2


class NumericalError(DP3Error, ArithmeticError):
    """A computation hit a singularity or failed to converge."""

    exit_code = 3


class OutputError(DP3Error, OSError):
    """Output files cannot be written."""

    exit_code = 4


# Parameter / domain errors


class InvalidB(ParameterError):
    pass


class SpecialModeViolation(ParameterError):
    pass


class NonRealA(ParameterError):
    pass


class NonFiniteValue(ParameterError):
    pass


class InvalidState(ParameterError):
    pass


class InvalidTau(ParameterError):
    pass


class InvalidSeriesOrder(ParameterError):
    pass


class OutsideRadius(ParameterError):
    pass


class OutOfRange(ParameterError):
    pass


class UnknownFigure(ParameterError):
    pass


class NonPositiveQ2(ParameterError):
    pass


# Numerical errors


class ZeroU(NumericalError):
    pass


class ZeroTau(NumericalError):
    pass


class PoleOfGamma(NumericalError):
    pass


class DegenerateDenominator(NumericalError):
    pass


class PoleEncountered(NumericalError):
    pass


class ZeroCrossing(NumericalError):
    pass


class StepUnderflow(NumericalError):
    pass


class StepLimitExceeded(NumericalError):
    pass
