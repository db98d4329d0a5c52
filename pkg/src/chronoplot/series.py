"""Keyed time-series tables with self-validation and CSV ingestion.

A table holds one index column of granule indices at a single granularity
and time zone, zero or more string key columns identifying distinct
series, and one or more real measure columns. Validation reports duplicate
(key, index) pairs and per-key gaps instead of failing.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

from .errors import GranularityError, IngestionError, SchemaError
from .timecore.granularity import GranularitySpec, refines
from .timecore.timepoint import (
    TimePoint,
    coarsen_index,
    format_index_value,
    parse_index_value,
)
from .timecore.timezone import TimeZone, TimeZoneRegistry, UTC, builtin_registry

AGGREGATE_STATS = ("mean", "sum", "min", "max", "first", "last")


@dataclass
class TimeSeries:
    granularity: GranularitySpec
    tz: TimeZone
    index: list[int]
    keys: dict[str, list[str]] = field(default_factory=dict)
    measures: dict[str, list[float | None]] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        n = len(self.index)
        for col, values in {**self.keys, **self.measures}.items():
            if len(values) != n:
                raise SchemaError(f"column {col!r} has {len(values)} values for {n} rows")
        if not self.granularity.is_linear:
            raise GranularityError("a time series indexes a linear granularity")

    def __len__(self) -> int:
        return len(self.index)

    def key_tuple(self, row: int) -> tuple[str, ...]:
        return tuple(values[row] for values in self.keys.values())

    def point(self, row: int) -> TimePoint:
        return TimePoint(self.granularity, self.index[row], self.tz)

    def column(self, name: str) -> list:
        if name in self.keys:
            return self.keys[name]
        if name in self.measures:
            return self.measures[name]
        raise SchemaError(f"no column named {name!r}")

    def column_names(self) -> list[str]:
        return list(self.keys) + list(self.measures)


@dataclass
class ValidationReport:
    duplicates: list[tuple[tuple[str, ...], int, list[int]]] = field(default_factory=list)
    gaps: list[tuple[tuple[str, ...], int, int]] = field(default_factory=list)
    checked_gaps: bool = False

    @property
    def is_valid(self) -> bool:
        return not self.duplicates and not self.gaps

    def merged_with(self, other: "ValidationReport") -> "ValidationReport":
        return ValidationReport(
            duplicates=self.duplicates + other.duplicates,
            gaps=self.gaps + other.gaps,
            checked_gaps=self.checked_gaps or other.checked_gaps,
        )

    def describe(self, ts: TimeSeries) -> list[str]:
        """Human-readable one-line descriptions of every violation."""
        lines = []
        for key, idx, rows in self.duplicates:
            label = format_index_value(ts.granularity, idx, ts.tz)
            where = ", ".join(str(r) for r in rows)
            lines.append(f"duplicate observation for key {_key_text(key)} at {label} (rows {where})")
        for key, start, end in self.gaps:
            lo = format_index_value(ts.granularity, start, ts.tz)
            hi = format_index_value(ts.granularity, end, ts.tz)
            count = end - start + 1
            span = lo if count == 1 else f"{lo} .. {hi}"
            lines.append(f"gap for key {_key_text(key)}: {count} missing {ts.granularity} granule(s) at {span}")
        return lines

    def to_json_dict(self, ts: TimeSeries) -> dict:
        return {
            "is_valid": self.is_valid,
            "duplicates": [
                {
                    "key": list(key),
                    "index": format_index_value(ts.granularity, idx, ts.tz),
                    "rows": rows,
                }
                for key, idx, rows in self.duplicates
            ],
            "gaps": [
                {
                    "key": list(key),
                    "first_missing": format_index_value(ts.granularity, start, ts.tz),
                    "last_missing": format_index_value(ts.granularity, end, ts.tz),
                    "count": end - start + 1,
                }
                for key, start, end in self.gaps
            ],
        }


def _key_text(key: tuple[str, ...]) -> str:
    return "(" + ", ".join(key) + ")" if key else "(none)"


def check_unique(ts: TimeSeries) -> ValidationReport:
    """Report every (key, index) pair observed more than once."""
    seen: dict[tuple, list[int]] = {}
    for row in range(len(ts)):
        seen.setdefault((ts.key_tuple(row), ts.index[row]), []).append(row)
    duplicates = [
        (key, idx, rows)
        for (key, idx), rows in sorted(seen.items(), key=lambda kv: kv[1][0])
        if len(rows) > 1
    ]
    return ValidationReport(duplicates=duplicates)


def detect_gaps(ts: TimeSeries) -> ValidationReport:
    """Report maximal runs of missing indices between each key's min and max."""
    by_key: dict[tuple[str, ...], set[int]] = {}
    for row in range(len(ts)):
        by_key.setdefault(ts.key_tuple(row), set()).add(ts.index[row])
    gaps = []
    for key in sorted(by_key):
        present = sorted(by_key[key])
        for a, b in zip(present, present[1:]):
            if b > a + 1:
                gaps.append((key, a + 1, b - 1))
    return ValidationReport(gaps=gaps, checked_gaps=True)


def fill_gaps(ts: TimeSeries) -> TimeSeries:
    """Insert rows for missing indices with null measures; output sorted by
    (key, index). Cannot repair duplicates, which pass through unchanged.
    """
    rows = sorted(range(len(ts)), key=lambda r: (ts.key_tuple(r), ts.index[r]))
    index: list[int] = []
    keys: dict[str, list[str]] = {col: [] for col in ts.keys}
    measures: dict[str, list[float | None]] = {col: [] for col in ts.measures}

    def emit(idx: int, src_row: int | None, key: tuple[str, ...]) -> None:
        index.append(idx)
        for col_i, col in enumerate(keys):
            keys[col].append(key[col_i])
        for col in measures:
            measures[col].append(ts.measures[col][src_row] if src_row is not None else None)

    prev_key: tuple[str, ...] | None = None
    prev_idx = 0
    for row in rows:
        key = ts.key_tuple(row)
        idx = ts.index[row]
        if key == prev_key:
            for missing in range(prev_idx + 1, idx):
                emit(missing, None, key)
        emit(idx, row, key)
        prev_key, prev_idx = key, idx
    return TimeSeries(ts.granularity, ts.tz, index, keys, measures, name=ts.name)


def aggregate(ts: TimeSeries, coarser: GranularitySpec, stat: str) -> TimeSeries:
    """Group rows into coarser granules per key and summarize each measure.

    Null measures are skipped; a group with no non-null values yields null.
    first/last follow temporal order (ties keep input order).
    """
    if stat not in AGGREGATE_STATS:
        raise ValueError(f"unknown statistic {stat!r}; expected one of {AGGREGATE_STATS}")
    if not coarser.is_linear or not refines(ts.granularity.unit, coarser.unit):
        raise GranularityError(
            f"cannot aggregate {ts.granularity} data into {coarser} granules"
        )
    groups: dict[tuple[tuple[str, ...], int], list[int]] = {}
    for row in range(len(ts)):
        coarse = coarsen_index(ts.granularity, ts.index[row], coarser, ts.tz)
        groups.setdefault((ts.key_tuple(row), coarse), []).append(row)

    index: list[int] = []
    keys: dict[str, list[str]] = {col: [] for col in ts.keys}
    measures: dict[str, list[float | None]] = {col: [] for col in ts.measures}
    for (key, coarse), rows in sorted(groups.items()):
        rows = sorted(rows, key=lambda r: ts.index[r])
        index.append(coarse)
        for col_i, col in enumerate(keys):
            keys[col].append(key[col_i])
        for col in measures:
            values = [ts.measures[col][r] for r in rows if ts.measures[col][r] is not None]
            measures[col].append(_summarize(values, stat))
    return TimeSeries(coarser, ts.tz, index, keys, measures, name=ts.name)


def _summarize(values: list[float], stat: str) -> float | None:
    if not values:
        return None
    if stat == "mean":
        return sum(values) / len(values)
    if stat == "sum":
        return sum(values)
    if stat == "min":
        return min(values)
    if stat == "max":
        return max(values)
    if stat == "first":
        return values[0]
    return values[-1]


# -- CSV ---------------------------------------------------------------------

@dataclass(frozen=True)
class CsvSchema:
    index_column: str
    granularity: GranularitySpec
    tz_id: str = "UTC"
    key_columns: tuple[str, ...] = ()
    measure_columns: tuple[str, ...] = ()


def read_csv(
    path: str,
    schema: CsvSchema,
    registry: TimeZoneRegistry | None = None,
) -> tuple[TimeSeries, list[str]]:
    """Load a table; returns it with any parse warnings (e.g. civil-time
    readings made ambiguous by a fall-back shift).

    Index values must match the declared granularity's text format; any
    failure is reported with its file line number.
    """
    registry = registry or builtin_registry()
    tz = registry.get(schema.tz_id)
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file") from None
        declared = [schema.index_column, *schema.key_columns, *schema.measure_columns]
        positions = {}
        for col in declared:
            if col not in header:
                raise SchemaError(f"{path}: declared column {col!r} not in header {header}")
            positions[col] = header.index(col)

        index: list[int] = []
        keys: dict[str, list[str]] = {col: [] for col in schema.key_columns}
        measures: dict[str, list[float | None]] = {col: [] for col in schema.measure_columns}
        warnings: list[str] = []
        for lineno, record in enumerate(reader, start=2):
            if len(record) < len(header):
                raise IngestionError(f"expected {len(header)} fields, got {len(record)}", lineno)
            try:
                idx, warning = parse_index_value(
                    record[positions[schema.index_column]], schema.granularity, tz
                )
            except IngestionError as exc:
                raise IngestionError(str(exc), lineno) from None
            if warning:
                warnings.append(f"line {lineno}: {warning}")
            index.append(idx)
            for col in schema.key_columns:
                keys[col].append(record[positions[col]])
            for col in schema.measure_columns:
                raw = record[positions[col]].strip()
                if raw == "" or raw == "NA":
                    measures[col].append(None)
                else:
                    try:
                        measures[col].append(float(raw))
                    except ValueError:
                        raise IngestionError(
                            f"measure {col!r} value {raw!r} is not a number", lineno
                        ) from None
    name = path.rsplit("/", 1)[-1]
    if name.endswith(".csv"):
        name = name[:-4]
    return TimeSeries(schema.granularity, tz, index, keys, measures, name=name), warnings


def write_csv(ts: TimeSeries, path: str, index_column: str = "time") -> None:
    """Write a table with canonical index text; nulls as empty fields."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([index_column, *ts.keys, *ts.measures])
        for row in range(len(ts)):
            record = [format_index_value(ts.granularity, ts.index[row], ts.tz)]
            record.extend(ts.keys[col][row] for col in ts.keys)
            for col in ts.measures:
                value = ts.measures[col][row]
                record.append("" if value is None else _format_measure(value))
            writer.writerow(record)


def _format_measure(value: float) -> str:
    return str(int(value)) if value == int(value) else repr(value)
