"""Exception types raised on rejected input.

Everything derives from :class:`InputError` (a ``ValueError``), so callers
that only care about "the input was bad" can catch one type. The CLI maps
``InputError`` to exit code 2.
"""


class InputError(ValueError):
    """Base class for rejected input: bad values, shapes, or parse failures."""


class ValidationError(InputError):
    """An input value violates a documented precondition."""


class DimensionError(InputError):
    """An array or vector has the wrong length or shape."""


class ParseError(InputError):
    """A text document could not be parsed."""

    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class DegenerateInputError(InputError):
    """The computation is undefined on this input (e.g. a zero block to normalize)."""


class ParameterDomainError(InputError):
    """Solver exponents fall outside the domain where the method is guaranteed to work."""


class SupportMismatchError(InputError):
    """Two vectors were compared whose zero patterns differ."""
