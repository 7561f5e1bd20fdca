"""Exception types shared across the package."""


class FractalcutError(Exception):
    """Base class for all package errors."""


class InputError(FractalcutError, ValueError):
    """A caller-supplied value violates a documented precondition."""


class ParseError(InputError):
    """Malformed serialized input; the message names the offending field."""


class EquivalenceError(InputError):
    """Instances handed to a composer do not share one equivalence class."""


class UnsupportedParameterError(InputError):
    """Parameter combination outside the range the construction supports."""


class ResourceBudgetError(FractalcutError, RuntimeError):
    """An exhaustive search exceeded its caller-supplied enumeration budget.

    Raised instead of returning a possibly wrong answer.
    """
