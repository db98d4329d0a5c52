"""Chronons, granularities, the Gregorian lattice, and time zones."""

from .granularity import (
    DAY,
    DAY_OF_MONTH,
    DAY_OF_WEEK,
    DAY_OF_YEAR,
    HOUR,
    HOUR_OF_DAY,
    Kind,
    MINUTE,
    MINUTE_OF_HOUR,
    MONTH,
    MONTH_OF_YEAR,
    SECOND,
    SECOND_OF_MINUTE,
    WEEK,
    WEEK_OF_YEAR,
    YEAR,
    CircularUnit,
    GranularitySpec,
    Unit,
    glb_granularity,
    linear,
    parse_granularity,
    refines,
)
from .timepoint import (
    TimePoint,
    coarsen_index,
    format_index_value,
    granule_bounds,
    parse_index_value,
    refine,
    to_circular,
    to_continuous,
)
from .timezone import (
    CivilLookup,
    DST_FALL,
    DST_SPRING,
    TimeZone,
    TimeZoneRegistry,
    Transition,
    UTC,
    absolute_to_civil,
    builtin_registry,
    civil_to_absolute,
    resolve_wall,
)

__all__ = [
    "CircularUnit",
    "CivilLookup",
    "DAY",
    "DAY_OF_MONTH",
    "DAY_OF_WEEK",
    "DAY_OF_YEAR",
    "DST_FALL",
    "DST_SPRING",
    "GranularitySpec",
    "HOUR",
    "HOUR_OF_DAY",
    "Kind",
    "MINUTE",
    "MINUTE_OF_HOUR",
    "MONTH",
    "MONTH_OF_YEAR",
    "SECOND",
    "SECOND_OF_MINUTE",
    "TimePoint",
    "TimeZone",
    "TimeZoneRegistry",
    "Transition",
    "UTC",
    "Unit",
    "WEEK",
    "WEEK_OF_YEAR",
    "YEAR",
    "absolute_to_civil",
    "builtin_registry",
    "civil_to_absolute",
    "coarsen_index",
    "format_index_value",
    "glb_granularity",
    "granule_bounds",
    "linear",
    "parse_granularity",
    "parse_index_value",
    "refine",
    "refines",
    "resolve_wall",
    "to_circular",
    "to_continuous",
]
