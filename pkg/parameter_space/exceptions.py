"""Errors raised by the parameter-space algebra"""


class ParameterError(ValueError):
    """Base class for parameter-space errors."""


class InadmissibleParametersError(ParameterError):
    """Parameters fail the admissibility checks."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class SingularParameterError(ParameterError):
    """A formula is evaluated at its pole."""


class EmptyBandIntersectionError(ParameterError):
    """The (alpha, beta) bands have no common point."""
