"""Exception hierarchy shared by the library, the services and the CLI."""
from typing import Optional


class RuncorrError(Exception):
    """Root of every error raised on purpose by this package."""


class InvalidInput(RuncorrError, ValueError):
    """Malformed literal or out-of-domain argument."""

    def __init__(self, message: str, position: Optional[int] = None) -> None:
        if position is not None:
            message = f"{message} (position {position})"
        super().__init__(message)
        self.position = position


class PeriodMismatch(RuncorrError, ValueError):
    pass


class InvalidShift(RuncorrError, ValueError):
    pass


class InvalidIndex(RuncorrError, IndexError):
    pass


class NotInImage(RuncorrError, ValueError):
    """Inverse composition map applied outside the map's image."""


class DegenerateSequence(RuncorrError, ValueError):
    """Constant sequence: it has no run structure (gamma would be 1)."""


class TooLarge(RuncorrError, ValueError):
    """Request beyond an exhaustion bound."""


class ConfigError(RuncorrError):
    pass


class CrossCheckFailure(RuncorrError):
    """Two independent computations of the same answer disagree."""
