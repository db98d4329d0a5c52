"""Exception types shared across the package."""


class ChronoplotError(Exception):
    """Base class for all package errors."""


class GranularityError(ChronoplotError):
    """Granularity is malformed or incompatible with the requested operation."""


class TimezoneError(ChronoplotError):
    """Unknown time zone id or malformed transition table."""


class IngestionError(ChronoplotError):
    """Data could not be parsed; carries the offending line number when known."""

    def __init__(self, message: str, line: "int | None" = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class SchemaError(ChronoplotError):
    """Declared data schema does not match the file."""


class SpecError(ChronoplotError):
    """Plot specification is invalid."""


class RenderError(ChronoplotError):
    """Scene cannot be rendered (e.g. degenerate domain)."""
