"""Exception types shared across the package."""


class FrobdimError(Exception):
    """Base class for package-specific errors."""


class ParseError(FrobdimError):
    """Raised when polynomial or instance-file text cannot be parsed.

    Carries the offending position so callers can point at the input.
    """

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class ResourceLimitExceeded(FrobdimError):
    """Raised when a computation exceeds its configured step budget.

    This is a distinct outcome, never silently converted into an answer.
    """

    def __init__(self, message: str, used: int | None = None, limit: int | None = None):
        super().__init__(message)
        self.used = used
        self.limit = limit
