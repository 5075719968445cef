"""Exception hierarchy shared by every module.

Two families matter for callers: :class:`InvalidConfiguration` means the
request itself was malformed (bad parameter values, unknown problem id,
missing minimizer data), while :class:`NumericalFailure` means a run broke
down mid-flight and carries the failing time or iteration index.
"""

from __future__ import annotations


class InertialFlowError(Exception):
    """Base class for all toolkit errors."""


class InvalidConfiguration(InertialFlowError):
    """Rejected parameter values or a malformed run configuration."""


class MissingMinimizer(InvalidConfiguration):
    """An operation that needs argmin data got an objective without it."""


class EmptyWindow(InvalidConfiguration):
    """A diagnostic window contains no trajectory samples."""


class DenominatorSingular(InvalidConfiguration):
    """Energy coefficient a(t) requested at or below its largest pole."""


class DenominatorNonpositive(InvalidConfiguration):
    """The closed-form a(t) denominator is not positive at the given time."""


class NoValidThreshold(InertialFlowError):
    """No time was found from which all energy conditions hold."""


class NumericalFailure(InertialFlowError):
    """Numerical breakdown during a run.

    ``t`` is the time at which the failure occurred (continuous runs),
    ``iteration`` the iterate index (discrete runs); either may be None.
    """

    def __init__(self, message: str, *, t: float | None = None,
                 iteration: int | None = None):
        if t is not None:
            message = f"{message} (at t={t:.12g})"
        if iteration is not None:
            message = f"{message} (at iteration n={iteration})"
        super().__init__(message)
        self.t = t
        self.iteration = iteration


class MaxStepsExceeded(NumericalFailure):
    """The adaptive integrator hit its step budget before t_end."""


class StepUnderflow(NumericalFailure):
    """The adaptive step size collapsed below 1e-14 * t."""


class NonFiniteState(NumericalFailure):
    """A state or stage stopped being finite and could not be recovered."""
