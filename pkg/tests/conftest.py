"""Shared helpers: seeded random vehicle streams for property tests."""

from __future__ import annotations

import random

from laneflow import VehicleRecord


def make_stream(seed: int, max_n: int = 200, float_share: float = 0.0) -> list[VehicleRecord]:
    """A reproducible random stream; float_share mixes in decimal speeds."""
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    vehicles = []
    for i in range(n):
        if float_share and rng.random() < float_share:
            speed: int | float = round(rng.uniform(0.5, 100.4), 1)
        else:
            speed = rng.randint(1, 100)
        vehicles.append(
            VehicleRecord(id=f"v{i + 1}", speed=speed, arrival=rng.randint(0, 300))
        )
    return vehicles
