"""Exception hierarchy shared by every module."""


class CheegerError(Exception):
    """Base class for all package errors."""


class InputError(CheegerError, ValueError):
    """Malformed graph, vector, cut or parameter."""


class OracleLimitError(InputError):
    """Instance too large for an exhaustive or dense oracle."""


class GenerationError(CheegerError, RuntimeError):
    """Random generator gave up before producing a connected graph."""


class NumericalError(CheegerError, ArithmeticError):
    """An iterative or dense numerical routine failed."""


class DegenerateError(NumericalError):
    """A Rayleigh quotient or pencil has a vanishing denominator."""
