"""Proleptic Gregorian date arithmetic on integer day numbers.

Day 0 is 1970-01-01 (a Thursday). Everything here is exact integer math;
no platform date libraries are involved, so behaviour is identical across
systems and over the full supported range.
"""

from __future__ import annotations

import re

from ..errors import IngestionError

SECONDS_PER_DAY = 86400

DAYS_IN_MONTH = (31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31)

MONTH_ABBREV = (
    "Jan", "Feb", "Mar", "Apr", "May", "Jun",
    "Jul", "Aug", "Sep", "Oct", "Nov", "Dec",
)

# Monday-first; day 0 of the week cycle is Monday.
WEEKDAY_ABBREV = ("Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun")


def is_leap(year: int) -> bool:
    return year % 4 == 0 and (year % 100 != 0 or year % 400 == 0)


def days_in_month(year: int, month: int) -> int:
    if month == 2 and is_leap(year):
        return 29
    return DAYS_IN_MONTH[month - 1]


def days_in_year(year: int) -> int:
    return 366 if is_leap(year) else 365


def days_from_civil(year: int, month: int, day: int) -> int:
    """Day number of a civil date (1970-01-01 -> 0).

    Closed-form era arithmetic; valid for any year, including negatives.
    """
    y = year - (1 if month <= 2 else 0)
    era = y // 400
    yoe = y - era * 400
    mp = (month + 9) % 12  # March-based month, March = 0
    doy = (153 * mp + 2) // 5 + day - 1
    doe = yoe * 365 + yoe // 4 - yoe // 100 + doy
    return era * 146097 + doe - 719468


def civil_from_days(day_number: int) -> tuple[int, int, int]:
    """Inverse of days_from_civil: (year, month, day)."""
    z = day_number + 719468
    era = z // 146097
    doe = z - era * 146097
    yoe = (doe - doe // 1460 + doe // 36524 - doe // 146096) // 365
    doy = doe - (365 * yoe + yoe // 4 - yoe // 100)
    mp = (5 * doy + 2) // 153
    day = doy - (153 * mp + 2) // 5 + 1
    month = mp + 3 if mp < 10 else mp - 9
    year = yoe + era * 400 + (1 if month <= 2 else 0)
    return year, month, day


def weekday(day_number: int) -> int:
    """Day of week, Monday = 0. Day 0 (1970-01-01) is Thursday = 3."""
    return (day_number + 3) % 7


def day_of_year(year: int, month: int, day: int) -> int:
    """0-based ordinal day within the year."""
    return days_from_civil(year, month, day) - days_from_civil(year, 1, 1)


def iso_week(day_number: int) -> tuple[int, int]:
    """ISO-8601 (week-year, week number 1..53) of a day.

    Weeks start Monday; week 1 is the week containing January 4 of the
    week-year, equivalently the week containing the first Thursday.
    """
    thursday = day_number - weekday(day_number) + 3
    year, _, _ = civil_from_days(thursday)
    jan4 = days_from_civil(year, 1, 4)
    week1_monday = jan4 - weekday(jan4)
    return year, (day_number - week1_monday) // 7 + 1


# -- wall-clock seconds ------------------------------------------------------
#
# A "wall" value is an integer count of seconds on a civil clock measured
# from 1970-01-01T00:00:00 on that same clock, with no offset applied.

def wall_from_fields(
    year: int, month: int, day: int, hour: int = 0, minute: int = 0, second: int = 0
) -> int:
    return (
        days_from_civil(year, month, day) * SECONDS_PER_DAY
        + hour * 3600
        + minute * 60
        + second
    )


def fields_from_wall(wall: int) -> tuple[int, int, int, int, int, int]:
    day_number, sod = divmod(wall, SECONDS_PER_DAY)
    year, month, day = civil_from_days(day_number)
    hour, rem = divmod(sod, 3600)
    minute, second = divmod(rem, 60)
    return year, month, day, hour, minute, second


def format_date(day_number: int) -> str:
    year, month, day = civil_from_days(day_number)
    return f"{year:04d}-{month:02d}-{day:02d}"


def format_wall(wall: int) -> str:
    y, mo, d, h, mi, s = fields_from_wall(wall)
    return f"{y:04d}-{mo:02d}-{d:02d}T{h:02d}:{mi:02d}:{s:02d}"


_DATE_RE = re.compile(r"^(\d{4})-(\d{2})-(\d{2})$")
_DATETIME_RE = re.compile(r"^(\d{4})-(\d{2})-(\d{2})T(\d{2}):(\d{2}):(\d{2})Z?$")


def parse_date(text: str) -> int:
    """Parse YYYY-MM-DD to a day number; strict field validation."""
    m = _DATE_RE.match(text)
    if not m:
        raise IngestionError(f"invalid date {text!r}, expected YYYY-MM-DD")
    year, month, day = int(m.group(1)), int(m.group(2)), int(m.group(3))
    _check_date_fields(text, year, month, day)
    return days_from_civil(year, month, day)


def parse_datetime(text: str) -> int:
    """Parse YYYY-MM-DDTHH:MM:SS (optional trailing Z) to wall seconds."""
    m = _DATETIME_RE.match(text)
    if not m:
        raise IngestionError(
            f"invalid datetime {text!r}, expected YYYY-MM-DDTHH:MM:SS"
        )
    year, month, day = int(m.group(1)), int(m.group(2)), int(m.group(3))
    hour, minute, second = int(m.group(4)), int(m.group(5)), int(m.group(6))
    _check_date_fields(text, year, month, day)
    if hour > 23 or minute > 59 or second > 59:
        raise IngestionError(f"invalid time of day in {text!r}")
    return wall_from_fields(year, month, day, hour, minute, second)


def _check_date_fields(text: str, year: int, month: int, day: int) -> None:
    if not 1 <= month <= 12:
        raise IngestionError(f"invalid month in {text!r}")
    if not 1 <= day <= days_in_month(year, month):
        raise IngestionError(f"invalid day of month in {text!r}")
