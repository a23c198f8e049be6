"""Exception hierarchy shared by the library and the CLI exit-code mapping."""


class LevinoiseError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(LevinoiseError):
    """Malformed or inconsistent configuration input (CLI exit code 2)."""


class DomainError(LevinoiseError, ValueError):
    """Physically invalid input to an operation (CLI exit code 3).

    ``operation`` names the operation that rejected the input.
    """

    def __init__(self, message, operation=None):
        self.operation = operation
        if operation:
            message = f"{operation}: {message}"
        super().__init__(message)


class NumericError(LevinoiseError, ArithmeticError):
    """A numerical procedure failed to converge or resolve (CLI exit code 4)."""
