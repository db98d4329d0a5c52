"""chronoplot: a temporal grammar-of-graphics engine.

Temporal semantics (granularities, calendars, civil vs absolute time) are
carried intact from data ingestion to the rendered SVG, and violations of
time-series validity are surfaced rather than silently drawn over.
"""

from . import timecore
from .errors import (
    ChronoplotError,
    GranularityError,
    IngestionError,
    RenderError,
    SchemaError,
    SpecError,
    TimezoneError,
)
from .series import (
    CsvSchema,
    TimeSeries,
    ValidationReport,
    aggregate,
    check_unique,
    detect_gaps,
    fill_gaps,
    read_csv,
    write_csv,
)

__version__ = "0.1.0"
