"""Granularity-tagged time points and granule arithmetic.

A TimePoint is an integer granule index at a linear granularity, in a time
zone. Granule bounds for day-and-coarser granularities follow the civil
clock of the zone (a day across a daylight-saving shift spans 23 or 25
absolute hours); sub-day granularities tick uniformly in absolute time.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering

from ..errors import GranularityError
from . import calendar as cal
from .granularity import (
    CircularUnit,
    GranularitySpec,
    Kind,
    UNIT_SECONDS,
    Unit,
    circular_base,
    linear,
    refines,
)
from .timezone import TimeZone, UTC, resolve_wall

SECONDS_PER_DAY = cal.SECONDS_PER_DAY

# Week 0 contains the epoch day; weeks are Monday-anchored, and 1970-01-01
# is a Thursday, so week i covers day indices 7i-3 .. 7i+3.
WEEK_EPOCH_SHIFT = -3


@total_ordering
@dataclass(frozen=True)
class TimePoint:
    granularity: GranularitySpec
    index: int
    tz: TimeZone = UTC

    def __post_init__(self):
        if not self.granularity.is_linear:
            raise GranularityError("a TimePoint indexes a linear granularity")

    def _check_comparable(self, other: "TimePoint") -> None:
        if self.granularity != other.granularity or self.tz.id != other.tz.id:
            raise GranularityError(
                "TimePoints compare only within one granularity and time zone"
            )

    def __lt__(self, other: "TimePoint") -> bool:
        self._check_comparable(other)
        return self.index < other.index


def granule_wall_bounds(g: GranularitySpec, i: int) -> tuple[int, int]:
    """Half-open [start, end) of granule i on the civil wall clock, in
    integer wall seconds. Defined for day and coarser units.
    """
    unit = g.unit
    if unit is Unit.DAY:
        return i * SECONDS_PER_DAY, (i + 1) * SECONDS_PER_DAY
    if unit is Unit.WEEK:
        start_day = 7 * i + WEEK_EPOCH_SHIFT
        return start_day * SECONDS_PER_DAY, (start_day + 7) * SECONDS_PER_DAY
    if unit is Unit.MONTH:
        year, rem = divmod(i, 12)
        start = cal.days_from_civil(1970 + year, rem + 1, 1)
        year_next, rem_next = divmod(i + 1, 12)
        end = cal.days_from_civil(1970 + year_next, rem_next + 1, 1)
        return start * SECONDS_PER_DAY, end * SECONDS_PER_DAY
    if unit is Unit.YEAR:
        start = cal.days_from_civil(1970 + i, 1, 1)
        end = cal.days_from_civil(1971 + i, 1, 1)
        return start * SECONDS_PER_DAY, end * SECONDS_PER_DAY
    raise GranularityError(f"{unit.value} granules are not civil-clock aligned")


def granule_bounds(g: GranularitySpec, i: int, tz: TimeZone) -> tuple[float, float]:
    """Half-open absolute interval [start, end) of granule i.

    Consecutive granules tile the timeline exactly: end(i) == start(i+1).
    """
    if not g.is_linear:
        raise GranularityError("granule bounds are defined for linear granularities")
    unit_len = UNIT_SECONDS.get(g.unit)
    if unit_len is not None:
        return float(i * unit_len), float((i + 1) * unit_len)
    wall_start, wall_end = granule_wall_bounds(g, i)
    return float(resolve_wall(wall_start, tz)), float(resolve_wall(wall_end, tz))


def to_continuous(tp: TimePoint, align: float = 0.5) -> float:
    """Continuous instant at the align fraction of the granule's span.

    0 is the granule start, 1 its end; the default is the middle.
    """
    if not 0.0 <= align <= 1.0:
        raise ValueError(f"align must be within [0, 1], got {align}")
    start, end = granule_bounds(tp.granularity, tp.index, tp.tz)
    return start + align * (end - start)


def refine(tp: TimePoint, finer: GranularitySpec) -> range:
    """Indices of the finer granules that exactly tile tp's granule."""
    if not finer.is_linear:
        raise GranularityError("refine targets a linear granularity")
    g = tp.granularity
    if finer.unit is g.unit:
        return range(tp.index, tp.index + 1)
    if not refines(finer.unit, g.unit):
        raise GranularityError(f"{finer.unit.value} does not refine {g.unit.value}")

    fine_len = UNIT_SECONDS.get(finer.unit)
    coarse_len = UNIT_SECONDS.get(g.unit)
    if fine_len is not None and coarse_len is not None:
        ratio = coarse_len // fine_len
        return range(tp.index * ratio, (tp.index + 1) * ratio)

    wall_start, wall_end = granule_wall_bounds(g, tp.index)
    if finer.unit is Unit.DAY:
        return range(wall_start // SECONDS_PER_DAY, wall_end // SECONDS_PER_DAY)
    if finer.unit is Unit.MONTH:
        # only years decompose into months
        return range(tp.index * 12, (tp.index + 1) * 12)
    # sub-day granules under a civil-clock parent: absolute bounds must land
    # on whole granule boundaries, which holds for whole-unit UTC offsets.
    start = int(resolve_wall(wall_start, tp.tz))
    end = int(resolve_wall(wall_end, tp.tz))
    if start % fine_len or end % fine_len:
        raise GranularityError(
            f"{tp.tz.id} offsets do not align {g.unit.value} bounds to whole {finer.unit.value}s"
        )
    return range(start // fine_len, end // fine_len)


def coarsen_index(g: GranularitySpec, i: int, coarser: GranularitySpec, tz: TimeZone) -> int:
    """Index of the coarser granule containing granule i."""
    if not (g.is_linear and coarser.is_linear):
        raise GranularityError("coarsen is defined for linear granularities")
    if g.unit is coarser.unit:
        return i
    if not refines(g.unit, coarser.unit):
        raise GranularityError(f"{g.unit.value} does not refine {coarser.unit.value}")

    fine_len = UNIT_SECONDS.get(g.unit)
    coarse_len = UNIT_SECONDS.get(coarser.unit)
    if fine_len is not None and coarse_len is not None:
        return (i * fine_len) // coarse_len

    if fine_len is not None:
        # membership judged by the granule's civil start
        start = i * fine_len
        wall = start + tz.offset_at(start)
        day = wall // SECONDS_PER_DAY
    else:
        day = granule_wall_bounds(g, i)[0] // SECONDS_PER_DAY

    if coarser.unit is Unit.DAY:
        return day
    if coarser.unit is Unit.WEEK:
        return (day - WEEK_EPOCH_SHIFT) // 7
    year, month, _ = cal.civil_from_days(day)
    if coarser.unit is Unit.MONTH:
        if g.unit is Unit.MONTH:
            return i
        return (year - 1970) * 12 + month - 1
    if coarser.unit is Unit.YEAR:
        if g.unit is Unit.MONTH:
            return i // 12
        return year - 1970
    raise GranularityError(f"cannot coarsen to {coarser.unit.value}")


def to_circular(tp: TimePoint, target: GranularitySpec) -> int:
    """Circular index of tp within target's cycle, in [0, period).

    Indices a whole cycle apart map to the same value; ordering within a
    cycle is preserved. Quasi-circular day/week indices are 0-based here
    (labels add 1).
    """
    if target.kind is Kind.LINEAR:
        raise GranularityError("target of to_circular must be circular or quasi-circular")
    base_unit = circular_base(target)
    if not refines(tp.granularity.unit, base_unit):
        raise GranularityError(
            f"{target.unit.value} is not derivable from {tp.granularity.unit.value}"
        )
    base = coarsen_index(tp.granularity, tp.index, linear(base_unit), tp.tz)

    unit = target.unit
    if unit in (CircularUnit.SECOND_OF_MINUTE, CircularUnit.MINUTE_OF_HOUR,
                CircularUnit.HOUR_OF_DAY):
        # civil reading of the granule start
        length = UNIT_SECONDS[base_unit]
        start = base * length
        wall = start + tp.tz.offset_at(start)
        if unit is CircularUnit.SECOND_OF_MINUTE:
            return wall % 60
        if unit is CircularUnit.MINUTE_OF_HOUR:
            return (wall // 60) % 60
        return (wall // 3600) % 24
    if unit is CircularUnit.DAY_OF_WEEK:
        return cal.weekday(base)
    if unit is CircularUnit.MONTH_OF_YEAR:
        return base % 12
    if unit is CircularUnit.DAY_OF_MONTH:
        return cal.civil_from_days(base)[2] - 1
    if unit is CircularUnit.DAY_OF_YEAR:
        year, month, day = cal.civil_from_days(base)
        return cal.day_of_year(year, month, day)
    if unit is CircularUnit.WEEK_OF_YEAR:
        # ISO week of the week's Thursday (day index 7*base)
        return cal.iso_week(7 * base)[1] - 1
    raise GranularityError(f"no circular rule for {unit}")


# -- index text formats ------------------------------------------------------

def parse_index_value(text: str, g: GranularitySpec, tz: TimeZone) -> tuple[int, "str | None"]:
    """Parse one time index at granularity g. Returns (index, warning).

    Formats: YYYY (year), YYYY-MM (month), YYYY-MM-DD (day and week),
    YYYY-MM-DDTHH:MM:SS (hour/minute/second, must sit on a granule start).
    Civil readings repeated by a fall-back shift take the earlier instant
    and carry a warning; readings inside a spring-forward gap are errors.
    """
    from ..errors import IngestionError
    from .timezone import civil_to_absolute

    text = text.strip()
    unit = g.unit
    if unit is Unit.YEAR:
        if len(text) != 4 or not text.isdigit():
            raise IngestionError(f"invalid year {text!r}, expected YYYY")
        return int(text) - 1970, None
    if unit is Unit.MONTH:
        if len(text) != 7 or text[4] != "-" or not (text[:4] + text[5:]).isdigit():
            raise IngestionError(f"invalid month {text!r}, expected YYYY-MM")
        year, month = int(text[:4]), int(text[5:])
        if not 1 <= month <= 12:
            raise IngestionError(f"invalid month in {text!r}")
        return (year - 1970) * 12 + month - 1, None
    if unit is Unit.DAY:
        return cal.parse_date(text), None
    if unit is Unit.WEEK:
        day = cal.parse_date(text)
        return (day - WEEK_EPOCH_SHIFT) // 7, None

    wall = cal.parse_datetime(text)
    length = UNIT_SECONDS[unit]
    if wall % length:
        raise IngestionError(f"{text!r} is not on a {unit.value} boundary")
    lookup = civil_to_absolute(wall, tz)
    if lookup.kind == "unique":
        return int(lookup.instant) // length, None
    if lookup.kind == "ambiguous":
        return (
            int(lookup.earlier) // length,
            f"{text} is ambiguous in {tz.id} (clocks went back); using the earlier instant",
        )
    raise IngestionError(f"{text} does not exist in {tz.id} (clocks skipped forward)")


def format_index_value(g: GranularitySpec, i: int, tz: TimeZone = UTC) -> str:
    """Canonical civil text for a granule index; inverse of parse_index_value."""
    unit = g.unit
    if unit is Unit.YEAR:
        return f"{1970 + i:04d}"
    if unit is Unit.MONTH:
        year, rem = divmod(i, 12)
        return f"{1970 + year:04d}-{rem + 1:02d}"
    if unit is Unit.DAY:
        return cal.format_date(i)
    if unit is Unit.WEEK:
        return cal.format_date(7 * i + WEEK_EPOCH_SHIFT)
    length = UNIT_SECONDS[unit]
    start = i * length
    return cal.format_wall(start + tz.offset_at(start))
