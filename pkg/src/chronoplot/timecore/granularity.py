"""Granularity descriptors and the Gregorian refinement lattice.

Linear granularities (second .. year) partition the timeline into ordered,
contiguous, non-repeating granules. Circular granularities repeat with a
fixed period (day-of-week, month-of-year, ...); quasi-circular ones repeat
with an index-dependent period (day-of-month, day-of-year, week-of-year).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ..errors import GranularityError
from . import calendar as cal


class Kind(enum.Enum):
    LINEAR = "linear"
    CIRCULAR = "circular"
    QUASI_CIRCULAR = "quasi-circular"


class Unit(enum.Enum):
    SECOND = "second"
    MINUTE = "minute"
    HOUR = "hour"
    DAY = "day"
    WEEK = "week"
    MONTH = "month"
    YEAR = "year"


class CircularUnit(enum.Enum):
    SECOND_OF_MINUTE = "second-of-minute"
    MINUTE_OF_HOUR = "minute-of-hour"
    HOUR_OF_DAY = "hour-of-day"
    DAY_OF_WEEK = "day-of-week"
    DAY_OF_MONTH = "day-of-month"
    DAY_OF_YEAR = "day-of-year"
    WEEK_OF_YEAR = "week-of-year"
    MONTH_OF_YEAR = "month-of-year"


# Sub-day granules have fixed absolute length; day and coarser are civil.
UNIT_SECONDS = {Unit.SECOND: 1, Unit.MINUTE: 60, Unit.HOUR: 3600}

# Nominal lengths used only for tick-density estimates, never for bounds.
NOMINAL_SECONDS = {
    Unit.SECOND: 1,
    Unit.MINUTE: 60,
    Unit.HOUR: 3600,
    Unit.DAY: 86400,
    Unit.WEEK: 604800,
    Unit.MONTH: 2629746,     # 365.2425 / 12 days
    Unit.YEAR: 31556952,     # 365.2425 days
}

# a -> units that a refines (every granule of the coarser unit is an exact
# union of granules of a). Weeks refine nothing coarser: week boundaries
# cut across months and years.
_FINER_OR_EQUAL = {
    Unit.SECOND: {Unit.SECOND, Unit.MINUTE, Unit.HOUR, Unit.DAY, Unit.WEEK,
                  Unit.MONTH, Unit.YEAR},
    Unit.MINUTE: {Unit.MINUTE, Unit.HOUR, Unit.DAY, Unit.WEEK, Unit.MONTH,
                  Unit.YEAR},
    Unit.HOUR: {Unit.HOUR, Unit.DAY, Unit.WEEK, Unit.MONTH, Unit.YEAR},
    Unit.DAY: {Unit.DAY, Unit.WEEK, Unit.MONTH, Unit.YEAR},
    Unit.WEEK: {Unit.WEEK},
    Unit.MONTH: {Unit.MONTH, Unit.YEAR},
    Unit.YEAR: {Unit.YEAR},
}

# Coarse to fine, the order break generation descends.
DESCENT_ORDER = (Unit.YEAR, Unit.MONTH, Unit.WEEK, Unit.DAY, Unit.HOUR,
                 Unit.MINUTE, Unit.SECOND)

# base: the linear unit a circular index counts; cycle: the linear unit one
# full revolution spans. period None marks quasi-circular units.
_CIRCULAR_INFO = {
    CircularUnit.SECOND_OF_MINUTE: (Unit.SECOND, Unit.MINUTE, 60),
    CircularUnit.MINUTE_OF_HOUR: (Unit.MINUTE, Unit.HOUR, 60),
    CircularUnit.HOUR_OF_DAY: (Unit.HOUR, Unit.DAY, 24),
    CircularUnit.DAY_OF_WEEK: (Unit.DAY, Unit.WEEK, 7),
    CircularUnit.DAY_OF_MONTH: (Unit.DAY, Unit.MONTH, None),
    CircularUnit.DAY_OF_YEAR: (Unit.DAY, Unit.YEAR, None),
    CircularUnit.WEEK_OF_YEAR: (Unit.WEEK, Unit.YEAR, None),
    CircularUnit.MONTH_OF_YEAR: (Unit.MONTH, Unit.YEAR, 12),
}


@dataclass(frozen=True)
class GranularitySpec:
    kind: Kind
    unit: "Unit | CircularUnit"
    period: "int | None" = None

    def __post_init__(self):
        if self.kind is Kind.LINEAR:
            if not isinstance(self.unit, Unit):
                raise GranularityError(f"linear granularity needs a linear unit, got {self.unit}")
            if self.period is not None:
                raise GranularityError("linear granularity must not carry a period")
        else:
            if not isinstance(self.unit, CircularUnit):
                raise GranularityError(f"{self.kind.value} granularity needs a circular unit")
            fixed = _CIRCULAR_INFO[self.unit][2]
            if self.kind is Kind.CIRCULAR:
                if fixed is None:
                    raise GranularityError(f"{self.unit.value} has a varying period; use quasi-circular")
                if self.period != fixed:
                    raise GranularityError(f"{self.unit.value} has period {fixed}, got {self.period}")
                if self.period < 2:
                    raise GranularityError("circular period must be >= 2")
            else:  # quasi-circular
                if fixed is not None:
                    raise GranularityError(f"{self.unit.value} has a fixed period; use circular")
                if self.period is not None:
                    raise GranularityError("quasi-circular period varies with index; leave it unset")

    @property
    def is_linear(self) -> bool:
        return self.kind is Kind.LINEAR

    def __str__(self) -> str:
        return self.unit.value


def linear(unit: Unit) -> GranularitySpec:
    return GranularitySpec(Kind.LINEAR, unit)


SECOND = linear(Unit.SECOND)
MINUTE = linear(Unit.MINUTE)
HOUR = linear(Unit.HOUR)
DAY = linear(Unit.DAY)
WEEK = linear(Unit.WEEK)
MONTH = linear(Unit.MONTH)
YEAR = linear(Unit.YEAR)

SECOND_OF_MINUTE = GranularitySpec(Kind.CIRCULAR, CircularUnit.SECOND_OF_MINUTE, 60)
MINUTE_OF_HOUR = GranularitySpec(Kind.CIRCULAR, CircularUnit.MINUTE_OF_HOUR, 60)
HOUR_OF_DAY = GranularitySpec(Kind.CIRCULAR, CircularUnit.HOUR_OF_DAY, 24)
DAY_OF_WEEK = GranularitySpec(Kind.CIRCULAR, CircularUnit.DAY_OF_WEEK, 7)
MONTH_OF_YEAR = GranularitySpec(Kind.CIRCULAR, CircularUnit.MONTH_OF_YEAR, 12)
DAY_OF_MONTH = GranularitySpec(Kind.QUASI_CIRCULAR, CircularUnit.DAY_OF_MONTH)
DAY_OF_YEAR = GranularitySpec(Kind.QUASI_CIRCULAR, CircularUnit.DAY_OF_YEAR)
WEEK_OF_YEAR = GranularitySpec(Kind.QUASI_CIRCULAR, CircularUnit.WEEK_OF_YEAR)

_BY_NAME = {
    **{u.value: linear(u) for u in Unit},
    "second-of-minute": SECOND_OF_MINUTE,
    "minute-of-hour": MINUTE_OF_HOUR,
    "hour-of-day": HOUR_OF_DAY,
    "day-of-week": DAY_OF_WEEK,
    "month-of-year": MONTH_OF_YEAR,
    "day-of-month": DAY_OF_MONTH,
    "day-of-year": DAY_OF_YEAR,
    "week-of-year": WEEK_OF_YEAR,
}


def parse_granularity(name: str) -> GranularitySpec:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise GranularityError(
            f"unknown granularity {name!r}; expected one of {', '.join(sorted(_BY_NAME))}"
        ) from None


def refines(finer: Unit, coarser: Unit) -> bool:
    """True when every granule of `coarser` is an exact union of `finer` granules."""
    return coarser in _FINER_OR_EQUAL[finer]


def glb_granularity(a: GranularitySpec, b: GranularitySpec) -> GranularitySpec:
    """Coarsest linear granularity that refines both a and b.

    Comparable units give the finer of the two; weeks against months or
    years fall through to days, the finest unit common to both chains.
    """
    if not (a.is_linear and b.is_linear):
        raise GranularityError("common granularity is defined for linear granularities")
    if refines(a.unit, b.unit):
        return a
    if refines(b.unit, a.unit):
        return b
    for unit in DESCENT_ORDER:
        if refines(unit, a.unit) and refines(unit, b.unit):
            return linear(unit)
    raise GranularityError(f"no common granularity for {a} and {b}")  # unreachable


def circular_base(spec: GranularitySpec) -> Unit:
    return _CIRCULAR_INFO[spec.unit][0]


def circular_cycle(spec: GranularitySpec) -> Unit:
    return _CIRCULAR_INFO[spec.unit][1]


def circular_period(spec: GranularitySpec, cycle_index: int = 0) -> int:
    """Period of a circular granularity; for quasi-circular units the period
    of the given cycle (e.g. days in month for cycle_index counting months).
    """
    fixed = _CIRCULAR_INFO[spec.unit][2]
    if fixed is not None:
        return fixed
    if spec.unit is CircularUnit.DAY_OF_MONTH:
        year, rem = divmod(cycle_index, 12)
        return cal.days_in_month(1970 + year, rem + 1)
    if spec.unit is CircularUnit.DAY_OF_YEAR:
        return cal.days_in_year(1970 + cycle_index)
    if spec.unit is CircularUnit.WEEK_OF_YEAR:
        # ISO years have 52 or 53 weeks: 53 when Jan 1 or Dec 31 is a Thursday.
        year = 1970 + cycle_index
        jan1 = cal.days_from_civil(year, 1, 1)
        dec31 = cal.days_from_civil(year, 12, 31)
        return 53 if cal.weekday(jan1) == 3 or cal.weekday(dec31) == 3 else 52
    raise GranularityError(f"no period rule for {spec.unit}")
