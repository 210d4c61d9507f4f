"""Exception hierarchy shared by all gkdim modules."""


class GkdimError(Exception):
    """Base class for every error raised by this package."""


class FieldMismatch(GkdimError, TypeError):
    pass


class AmbientMismatch(GkdimError, TypeError):
    pass


class DerivationMismatch(AmbientMismatch):
    pass


class InvalidDerivation(GkdimError, ValueError):
    """A coefficient g_i outside k*x_i + k was supplied."""


class IndexOutOfRange(GkdimError, IndexError):
    pass


class ResourceLimit(GkdimError):
    """A configured size or degree cap was exceeded."""


class InsufficientData(GkdimError, ValueError):
    pass


class DegreeUnstable(GkdimError, ValueError):
    pass


class UnstableInput(GkdimError, ValueError):
    pass


class ExpressionSyntaxError(GkdimError, ValueError):
    """Parse failure with a 1-based line/column position."""

    def __init__(self, message, line=1, column=1):
        self.line = line
        self.column = column
        self.bare_message = message
        super().__init__(f"line {line}, column {column}: {message}")


class NegativeOrePower(ExpressionSyntaxError):
    pass
