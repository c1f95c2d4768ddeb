"""Census table ingestion.

The input is comma-separated text: a header whose first column names the row
key (city, sample id, ...) and whose remaining columns are class labels, then
one row per entry.  Two markers appear in real registration tables:

    "-"  count not available; the row parses but is unusable for sampling
    "A"  the class was folded into the Cars column; recorded as 0 with an
         annotation naming the merged label

Anything else must be a non-negative integer; offenders raise ParseError
with a 1-based line and column.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError, RowUnusable
from .stats import ClassCountVector

MISSING_MARK = "-"
MERGED_MARK = "A"


@dataclass(frozen=True)
class CensusRow:
    """One named row; counts hold None wherever the source cell was "-"."""

    name: str
    counts: tuple[int | None, ...]
    merged_into_cars: tuple[str, ...] = ()

    @property
    def usable(self) -> bool:
        return all(c is not None for c in self.counts)


@dataclass(frozen=True)
class CensusTable:
    labels: tuple[str, ...]
    rows: tuple[CensusRow, ...]

    def row(self, key: str | int) -> CensusRow:
        """Look up by exact name, else by 1-based index."""
        if isinstance(key, str):
            for row in self.rows:
                if row.name == key:
                    return row
            try:
                key = int(key)
            except ValueError:
                raise KeyError(f"no census row named {key!r}") from None
        if not 1 <= key <= len(self.rows):
            raise KeyError(f"row index {key} outside 1..{len(self.rows)}")
        return self.rows[key - 1]

    def usable_counts(self, key: str | int) -> ClassCountVector:
        """Counts for a row, refusing rows with missing cells."""
        row = self.row(key)
        if not row.usable:
            raise RowUnusable(
                f"census row {row.name!r} has missing counts and cannot drive sampling"
            )
        return ClassCountVector(labels=self.labels, counts=tuple(c for c in row.counts if c is not None))


def parse_census(text: str) -> CensusTable:
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise ParseError("empty census file", 1, 1)
    header = [cell.strip() for cell in lines[0].split(",")]
    if len(header) < 2:
        raise ParseError("census header needs a name column plus at least one class", 1, 1)
    labels = tuple(header[1:])
    if any(not label for label in labels):
        raise ParseError("census header has an empty class label", 1, 1)
    rows: list[CensusRow] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        cells = [cell.strip() for cell in raw.split(",")]
        if len(cells) != len(header):
            raise ParseError(
                f"expected {len(header)} columns, got {len(cells)}", lineno, 1
            )
        name = cells[0]
        if not name:
            raise ParseError("empty row name", lineno, 1)
        if name in seen:
            raise ParseError(f"duplicate row name {name!r}", lineno, 1)
        seen.add(name)
        counts: list[int | None] = []
        merged: list[str] = []
        for col, (label, cell) in enumerate(zip(labels, cells[1:]), start=2):
            if cell == MISSING_MARK:
                counts.append(None)
            elif cell == MERGED_MARK:
                counts.append(0)
                merged.append(label)
            else:
                try:
                    value = int(cell)
                except ValueError:
                    raise ParseError(
                        f"count {cell!r} is not an integer, {MISSING_MARK!r} or {MERGED_MARK!r}",
                        lineno,
                        col,
                    ) from None
                if value < 0:
                    raise ParseError("counts cannot be negative", lineno, col)
                counts.append(value)
        rows.append(CensusRow(name=name, counts=tuple(counts), merged_into_cars=tuple(merged)))
    if not rows:
        raise ParseError("census file has a header but no rows", 2, 1)
    return CensusTable(labels=labels, rows=tuple(rows))


def parse_counts_file(text: str) -> ClassCountVector:
    """Parse the two-line counts format: a label header and one count row."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ParseError("empty counts file", 1, 1)
    if len(lines) != 2:
        raise ParseError(f"expected a header line and one counts line, got {len(lines)} lines", 1, 1)
    labels = tuple(cell.strip() for cell in lines[0].split(","))
    cells = [cell.strip() for cell in lines[1].split(",")]
    if len(cells) != len(labels):
        raise ParseError(f"expected {len(labels)} counts, got {len(cells)}", 2, 1)
    counts = []
    for col, cell in enumerate(cells, start=1):
        try:
            value = int(cell)
        except ValueError:
            raise ParseError(f"count {cell!r} is not an integer", 2, col) from None
        if value < 0:
            raise ParseError("counts cannot be negative", 2, col)
        counts.append(value)
    return ClassCountVector(labels=labels, counts=tuple(counts))
