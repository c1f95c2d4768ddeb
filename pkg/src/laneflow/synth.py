"""Seeded synthesis of vehicle streams from per-class counts.

Given a count per class and a speed range per class, synthesize_stream emits
exactly that many vehicles of each class with speeds drawn uniformly from
the class range.  Arrival ticks are a cumulative sum of uniform gaps in
[0, arrival_gap_max], so they are non-decreasing; a final Fisher-Yates
shuffle permutes the speeds across the arrival slots so that a vehicle's
class carries no information about when it turns up.

The draw order is part of the contract (bit-identical streams for identical
inputs, reproducible in any language):

    1. one uniform speed per vehicle, classes taken in label order
    2. one uniform gap per vehicle, in arrival-slot order
    3. one Fisher-Yates shuffle of the speed list
    4. ids v1..vn assigned to arrival slots in order

All randomness comes from a single SplitMix64 stream seeded by the config.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .domain import VehicleRecord
from .errors import ConfigError
from .rng import SplitMix64
from .stats import ClassCountVector

# Default per-class speed ranges (km/h, inclusive), slow haulers to fast cars.
DEFAULT_SPEED_RANGES: dict[str, tuple[int, int]] = {
    "Rickshaw": (1, 20),
    "Trucks": (11, 40),
    "LCV": (21, 45),
    "Buses": (21, 45),
    "Vehicles": (11, 50),
    "Motor Cycle": (31, 50),
    "Cars": (31, 60),
}

DEFAULT_ARRIVAL_GAP_MAX = 5


@dataclass(frozen=True)
class SynthConfig:
    """Speed ranges, arrival spacing, and the seed for one synthesis run."""

    class_speed_range: dict[str, tuple[int, int]] = field(
        default_factory=lambda: dict(DEFAULT_SPEED_RANGES)
    )
    arrival_gap_max: int = DEFAULT_ARRIVAL_GAP_MAX
    seed: int = 0

    def __post_init__(self) -> None:
        for label, (lo, hi) in self.class_speed_range.items():
            if not (1 <= lo <= hi <= 100):
                raise ConfigError(
                    f"speed range for {label!r} must satisfy 1 <= lo <= hi <= 100, got {lo}-{hi}"
                )
        if not isinstance(self.arrival_gap_max, int) or self.arrival_gap_max < 1:
            raise ConfigError("arrival_gap_max must be a positive integer")
        if not 0 <= self.seed < (1 << 64):
            raise ConfigError("seed must fit in an unsigned 64-bit integer")

    def with_seed(self, seed: int) -> "SynthConfig":
        return SynthConfig(
            class_speed_range=dict(self.class_speed_range),
            arrival_gap_max=self.arrival_gap_max,
            seed=seed,
        )


def synthesize_stream(counts: ClassCountVector, config: SynthConfig) -> list[VehicleRecord]:
    """Deterministically synthesize a stream with the given class multiplicities."""
    for label, count in zip(counts.labels, counts.counts):
        if count > 0 and label not in config.class_speed_range:
            raise ConfigError(f"no speed range configured for class {label!r}")
    rng = SplitMix64(config.seed)
    speeds: list[int] = []
    for label, count in zip(counts.labels, counts.counts):
        if count == 0:
            continue
        lo, hi = config.class_speed_range[label]
        speeds.extend(rng.uniform_int(lo, hi) for _ in range(count))
    arrivals: list[int] = []
    tick = 0
    for _ in speeds:
        tick += rng.uniform_int(0, config.arrival_gap_max)
        arrivals.append(tick)
    rng.shuffle(speeds)
    return [
        VehicleRecord(id=f"v{i + 1}", speed=speed, arrival=arrival)
        for i, (speed, arrival) in enumerate(zip(speeds, arrivals))
    ]
