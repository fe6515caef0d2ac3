"""Exception hierarchy shared by all solver modules.

Library code raises these; only the scenario runner turns them into exit codes.
"""


class ResolventLabError(Exception):
    """Base class of every error raised by resolventlab."""


class DomainError(ResolventLabError, ValueError):
    """A point lies outside the domain of the operation (or hits a pole)."""


class ArgumentError(ResolventLabError, ValueError):
    """A parameter is out of range or malformed."""


class SchemaError(ArgumentError):
    """A JSON/YAML spec does not validate.

    Parameters
    ----------
    message : str
        Human readable description.
    pointer : str
        JSON-pointer-like path of the offending field, e.g. ``/segments/1/kind``.
    """

    def __init__(self, message, pointer=''):
        self.pointer = pointer or '/'
        super().__init__('{} (at {})'.format(message, self.pointer))


class UndefinedDerivativeError(ArgumentError):
    """Time derivative requested at a breakpoint of a piecewise-constant field."""


class NumericalError(ResolventLabError, ArithmeticError):
    """An iterative method failed to converge or produced non-finite values."""


class NoSolutionError(NumericalError):
    """Continuation collapsed: the root reached the boundary of the domain.

    Parameters
    ----------
    last_good_t : float
        Largest parameter value at which a root was accepted.
    t_target : float
        Parameter value that was requested.
    witness : complex or None
        Last accepted root, if any.
    """

    def __init__(self, last_good_t, t_target, witness=None, detail=''):
        self.last_good_t = float(last_good_t)
        self.t_target = float(t_target)
        self.witness = witness
        message = 'boundary collapse at t={:.17g} (target t={:.17g})'.format(self.last_good_t, self.t_target)
        if detail:
            message += ': ' + detail
        super().__init__(message)


class SingularityError(NumericalError):
    """A denominator that must stay away from zero vanished (1 - tG', 1 + psi)."""


class ContourError(NumericalError):
    """The function nearly vanishes on the integration contour."""


class ResolutionError(NumericalError):
    """Winding accumulation is not close to an integer; refine the contour."""


class TrajectoryTruncated(NumericalError):
    """An ODE trajectory came within the boundary margin before the final time.

    Parameters
    ----------
    s_reached : float
        Flow time that was reached.
    value : complex
        State at ``s_reached``.
    """

    def __init__(self, s_reached, value, t_target):
        self.s_reached = float(s_reached)
        self.value = complex(value)
        self.t_target = float(t_target)
        super().__init__('trajectory truncated near the boundary at s={:.6g} of t={:.6g} (z={})'.format(
            self.s_reached, self.t_target, self.value))


class UnsupportedError(ResolventLabError, NotImplementedError):
    """The requested classification or closed form is not available."""
