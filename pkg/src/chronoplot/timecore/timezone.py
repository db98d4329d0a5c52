"""Time zones as explicit UTC-offset transition tables.

No platform tz database is consulted: a zone is its id, a base offset, and
a sorted list of (instant, offset-after) transitions. Built-in synthetic
zones cover fixed offsets and one daylight-saving shift in each direction,
so tests and examples are hermetic.
"""

from __future__ import annotations

import re
from bisect import bisect_right
from dataclasses import dataclass, field

from ..errors import TimezoneError
from . import calendar as cal


@dataclass(frozen=True)
class Transition:
    at: int              # absolute seconds since epoch
    offset_after: int    # seconds east of UTC in force from `at` onward


@dataclass(frozen=True)
class TimeZone:
    id: str
    base_offset: int = 0
    transitions: tuple[Transition, ...] = ()
    # cached transition instants for bisection
    _ats: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        prev_at = None
        prev_off = self.base_offset
        for tr in self.transitions:
            if prev_at is not None and tr.at <= prev_at:
                raise TimezoneError(f"{self.id}: transition instants must strictly increase")
            if tr.offset_after == prev_off:
                raise TimezoneError(f"{self.id}: transition at {tr.at} does not change the offset")
            prev_at, prev_off = tr.at, tr.offset_after
        object.__setattr__(self, "_ats", tuple(tr.at for tr in self.transitions))

    def offset_at(self, t: float) -> int:
        """UTC offset in force at absolute instant t."""
        i = bisect_right(self._ats, t)
        return self.base_offset if i == 0 else self.transitions[i - 1].offset_after

    def offset_before(self, index: int) -> int:
        return self.base_offset if index == 0 else self.transitions[index - 1].offset_after


@dataclass(frozen=True)
class CivilLookup:
    """Result of resolving a civil wall-clock reading to absolute time."""

    kind: str  # 'unique' | 'ambiguous' | 'gap'
    instant: "float | None" = None
    earlier: "float | None" = None
    later: "float | None" = None
    before_offset: "int | None" = None
    after_offset: "int | None" = None

    @classmethod
    def make_unique(cls, t: float) -> "CivilLookup":
        return cls("unique", instant=t)

    @classmethod
    def make_ambiguous(cls, earlier: float, later: float) -> "CivilLookup":
        if not earlier < later:
            raise TimezoneError("ambiguous lookup requires earlier < later")
        return cls("ambiguous", earlier=earlier, later=later)

    @classmethod
    def make_gap(cls, before_offset: int, after_offset: int) -> "CivilLookup":
        return cls("gap", before_offset=before_offset, after_offset=after_offset)


def absolute_to_civil(t: float, tz: TimeZone) -> tuple[float, int]:
    """Wall-clock reading and offset in force at absolute instant t."""
    offset = tz.offset_at(t)
    return t + offset, offset


def civil_to_absolute(wall: float, tz: TimeZone) -> CivilLookup:
    """All absolute instants whose wall reading in tz equals `wall`.

    Fall-back transitions repeat wall readings (ambiguous, earlier first);
    spring-forward transitions skip them (gap, with the offsets on each side).
    """
    candidates = sorted({tz.base_offset, *(tr.offset_after for tr in tz.transitions)})
    matches = sorted({wall - off for off in candidates if tz.offset_at(wall - off) == off})
    if len(matches) == 1:
        return CivilLookup.make_unique(matches[0])
    if len(matches) >= 2:
        return CivilLookup.make_ambiguous(matches[0], matches[1])
    for i, tr in enumerate(tz.transitions):
        before = tz.offset_before(i)
        if before < tr.offset_after and tr.at + before <= wall < tr.at + tr.offset_after:
            return CivilLookup.make_gap(before, tr.offset_after)
    raise TimezoneError(f"{tz.id}: wall reading {wall} resolved to no instant and no gap")


def resolve_wall(wall: float, tz: TimeZone) -> float:
    """Single absolute instant for a wall reading.

    Ambiguous readings take the earlier instant; readings inside a
    spring-forward gap collapse onto the transition instant itself.
    """
    lookup = civil_to_absolute(wall, tz)
    if lookup.kind == "unique":
        return lookup.instant
    if lookup.kind == "ambiguous":
        return lookup.earlier
    for i, tr in enumerate(tz.transitions):
        before = tz.offset_before(i)
        if before < tr.offset_after and tr.at + before <= wall < tr.at + tr.offset_after:
            return tr.at
    raise TimezoneError(f"{tz.id}: unresolvable wall reading {wall}")


# -- built-in zones ----------------------------------------------------------

UTC = TimeZone("UTC")

# One spring-forward shift: clocks jump 02:00 -> 03:00 on 1970-03-29.
DST_SPRING = TimeZone(
    "dst-spring",
    base_offset=0,
    transitions=(Transition(cal.wall_from_fields(1970, 3, 29, 2), 3600),),
)

# One fall-back shift: clocks drop 03:00 -> 02:00 on 1970-10-25.
DST_FALL = TimeZone(
    "dst-fall",
    base_offset=3600,
    transitions=(Transition(cal.wall_from_fields(1970, 10, 25, 2), 0),),
)

_FIXED_RE = re.compile(r"^fixed([+-])(\d{2})(?::(\d{2}))?$")


class TimeZoneRegistry:
    """Resolves zone ids; built-ins plus zones loaded from transition files."""

    def __init__(self):
        self._zones: dict[str, TimeZone] = {
            UTC.id: UTC,
            DST_SPRING.id: DST_SPRING,
            DST_FALL.id: DST_FALL,
        }

    def get(self, tz_id: str) -> TimeZone:
        zone = self._zones.get(tz_id)
        if zone is not None:
            return zone
        m = _FIXED_RE.match(tz_id)
        if m:
            sign = 1 if m.group(1) == "+" else -1
            offset = sign * (int(m.group(2)) * 3600 + int(m.group(3) or 0) * 60)
            zone = TimeZone(tz_id, base_offset=offset)
            self._zones[tz_id] = zone
            return zone
        raise TimezoneError(f"unknown time zone id {tz_id!r}")

    def add(self, zone: TimeZone) -> None:
        self._zones[zone.id] = zone

    def load_file(self, path: str) -> list[str]:
        """Load zones from a transition file; returns the ids loaded.

        Format, one or more blocks separated by blank lines:

            <tz-id>
            base <offset-seconds>
            transition <ISO-8601 UTC instant>Z <offset-seconds>
        """
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
        loaded: list[str] = []
        block: list[tuple[int, str]] = []
        for lineno, raw in enumerate(lines, start=1):
            line = raw.strip()
            if not line:
                if block:
                    loaded.append(self._parse_block(block))
                    block = []
                continue
            block.append((lineno, line))
        if block:
            loaded.append(self._parse_block(block))
        if not loaded:
            raise TimezoneError(f"{path}: no time zone definitions found")
        return loaded

    def _parse_block(self, block: list[tuple[int, str]]) -> str:
        lineno, header = block[0]
        if header.split() != [header] or header.startswith(("base", "transition")):
            raise TimezoneError(f"line {lineno}: expected a time zone id header, got {header!r}")
        base: "int | None" = None
        transitions: list[Transition] = []
        for lineno, line in block[1:]:
            parts = line.split()
            if parts[0] == "base":
                if base is not None:
                    raise TimezoneError(f"line {lineno}: duplicate base line for {header!r}")
                base = _parse_offset(parts, lineno, expected_len=2)
            elif parts[0] == "transition":
                if len(parts) != 3:
                    raise TimezoneError(f"line {lineno}: expected 'transition <instant> <offset>'")
                if not parts[1].endswith("Z"):
                    raise TimezoneError(f"line {lineno}: transition instant must be UTC (trailing Z)")
                at = cal.parse_datetime(parts[1])
                transitions.append(Transition(at, _parse_offset(parts, lineno, expected_len=3)))
            else:
                raise TimezoneError(f"line {lineno}: unknown directive {parts[0]!r}")
        if base is None:
            raise TimezoneError(f"zone {header!r} is missing its base line")
        zone = TimeZone(header, base_offset=base, transitions=tuple(transitions))
        self.add(zone)
        return header


def _parse_offset(parts: list[str], lineno: int, expected_len: int) -> int:
    if len(parts) != expected_len:
        raise TimezoneError(f"line {lineno}: malformed directive {' '.join(parts)!r}")
    try:
        return int(parts[-1])
    except ValueError:
        raise TimezoneError(f"line {lineno}: offset must be an integer, got {parts[-1]!r}") from None


def builtin_registry() -> TimeZoneRegistry:
    return TimeZoneRegistry()
