"""Core vocabulary: vehicles, speed classes, lane plans, reports.

Speeds are modeled on the open interval (0, 101) km/h and fall into five
classes, each an open band:

    A: 0 < v < 11      B: 10 < v < 31     C: 30 < v < 46
    D: 45 < v < 51     E: 50 < v < 101

The bands overlap at their integer edges (10, 30, 45, 50); classification is
first-match in A..E order, so integer speeds land in disjoint ranges
(A: 1-10, B: 11-30, C: 31-45, D: 46-50, E: 51-100) while decimal speeds such
as 10.5 resolve to the earlier band.  Anything at or below 0, or at or above
101, is outside the model and rejected — never clamped.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import EmptyStream, ParseError, SpeedOutOfModel

Speed = int | float  # km/h; int preserved when the source text is integral


class SpeedClass(enum.IntEnum):
    """The five speed classes, ordered slowest to fastest."""

    A = 1
    B = 2
    C = 3
    D = 4
    E = 5


# (class, exclusive lower bound, exclusive upper bound), tested in order.
_CLASS_BANDS: tuple[tuple[SpeedClass, int, int], ...] = (
    (SpeedClass.A, 0, 11),
    (SpeedClass.B, 10, 31),
    (SpeedClass.C, 30, 46),
    (SpeedClass.D, 45, 51),
    (SpeedClass.E, 50, 101),
)


def classify_speed(speed: Speed) -> SpeedClass:
    """Map a speed to its class, first matching band wins.

    Raises SpeedOutOfModel for speeds outside the open interval (0, 101).
    """
    if not 0 < speed < 101:
        raise SpeedOutOfModel(f"speed {speed} outside the modeled interval (0, 101) km/h")
    for cls, lo, hi in _CLASS_BANDS:
        if lo < speed < hi:
            return cls
    raise AssertionError(f"class bands failed to cover {speed}")  # unreachable: bands cover (0, 101)


@dataclass(frozen=True)
class VehicleRecord:
    """One observed vehicle: opaque id, speed in km/h, arrival tick."""

    id: str
    speed: Speed
    arrival: int

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("vehicle id must be a non-empty string")
        if not 0 < self.speed < 101:
            raise SpeedOutOfModel(
                f"vehicle {self.id!r}: speed {self.speed} outside the modeled interval (0, 101) km/h"
            )
        if not isinstance(self.arrival, int) or isinstance(self.arrival, bool):
            raise ValueError(f"vehicle {self.id!r}: arrival must be an integer tick")
        if self.arrival < 0:
            raise ValueError(f"vehicle {self.id!r}: arrival must be >= 0")

    @property
    def speed_class(self) -> SpeedClass:
        return classify_speed(self.speed)


@dataclass(frozen=True)
class LanePlan:
    """Outcome of speed-class lane formation.

    Lanes are numbered 1..lane_count in order of first appearance of each
    class in the input stream; one lane per distinct class.
    """

    lane_count: int
    assignment: dict[str, int]        # vehicle id -> lane index
    lane_class: dict[int, SpeedClass]  # lane index -> class

    def __post_init__(self) -> None:
        if self.lane_count < 1:
            raise ValueError("a lane plan holds at least one lane")
        if sorted(self.lane_class) != list(range(1, self.lane_count + 1)):
            raise ValueError("lanes must be numbered 1..lane_count consecutively")
        if len(set(self.lane_class.values())) != self.lane_count:
            raise ValueError("one lane per distinct speed class")
        for vid, lane in self.assignment.items():
            if lane not in self.lane_class:
                raise ValueError(f"vehicle {vid!r} assigned to unknown lane {lane}")


@dataclass(frozen=True)
class TransitionEvent:
    """One predicted lane transition caused by an overtaking pair."""

    overtaker_id: str
    overtaken_id: str
    from_lane: int
    to_lane: int
    catch_up_ticks: int

    def __post_init__(self) -> None:
        if self.from_lane == self.to_lane:
            raise ValueError("a transition must change lanes")
        if self.from_lane < 1 or self.to_lane < 1:
            raise ValueError("lane indices are 1-based")
        if self.catch_up_ticks < 1:
            raise ValueError("catch-up takes at least one tick")


@dataclass(frozen=True)
class SimulationReport:
    """What a planner run produced, ready for canonical serialization."""

    algorithm: str       # "part1" | "part2"
    counting_mode: str   # "event" | "literal"
    lane_count: int
    transition_count: int
    events: tuple[TransitionEvent, ...] = ()
    lane_average_speed: dict[int, float] = field(default_factory=dict)
    lane_population: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.algorithm not in ("part1", "part2"):
            raise ValueError(f"unknown algorithm {self.algorithm!r}")
        if self.counting_mode not in ("event", "literal"):
            raise ValueError(f"unknown counting mode {self.counting_mode!r}")
        if self.transition_count < 0:
            raise ValueError("transition count is non-negative")
        if self.counting_mode == "event" and self.transition_count != len(self.events):
            raise ValueError("event mode: transition_count must equal len(events)")


# ---------------------------------------------------------------------------
# Vehicle stream file format: CSV with header  id,speed,arrival
# ---------------------------------------------------------------------------

VEHICLE_FILE_HEADER = ("id", "speed", "arrival")


def _parse_speed_cell(text: str, line: int, column: int) -> Speed:
    try:
        return int(text)
    except ValueError:
        pass
    try:
        value = float(text)
    except ValueError:
        raise ParseError(f"speed {text!r} is not a number", line, column) from None
    if value != value or value in (float("inf"), float("-inf")):
        raise ParseError(f"speed {text!r} is not a finite number", line, column)
    return value


def parse_vehicle_file(text: str) -> list[VehicleRecord]:
    """Parse the id,speed,arrival CSV format into validated records.

    Raises ParseError (with 1-based line/column) for structural problems and
    SpeedOutOfModel for well-formed rows whose speed the model rejects.
    """
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty vehicle file", 1, 1)
    header = tuple(cell.strip() for cell in lines[0].split(","))
    if header != VEHICLE_FILE_HEADER:
        raise ParseError(f"expected header {','.join(VEHICLE_FILE_HEADER)!r}", 1, 1)
    records: list[VehicleRecord] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        cells = [cell.strip() for cell in raw.split(",")]
        if len(cells) != 3:
            raise ParseError(f"expected 3 fields, got {len(cells)}", lineno, 1)
        vid, speed_text, arrival_text = cells
        if not vid:
            raise ParseError("empty vehicle id", lineno, 1)
        if vid in seen:
            raise ParseError(f"duplicate vehicle id {vid!r}", lineno, 1)
        seen.add(vid)
        speed = _parse_speed_cell(speed_text, lineno, 2)
        try:
            arrival = int(arrival_text)
        except ValueError:
            raise ParseError(f"arrival {arrival_text!r} is not an integer", lineno, 3) from None
        if arrival < 0:
            raise ParseError("arrival must be >= 0", lineno, 3)
        records.append(VehicleRecord(id=vid, speed=speed, arrival=arrival))
    if not records:
        raise EmptyStream("vehicle file contains a header but no rows")
    return records


def render_vehicle_file(vehicles: list[VehicleRecord]) -> str:
    lines = [",".join(VEHICLE_FILE_HEADER)]
    for v in vehicles:
        lines.append(f"{v.id},{v.speed},{v.arrival}")
    return "\n".join(lines) + "\n"
