"""Canonical JSON rendering of simulation reports.

Canonical means: keys sorted, compact separators, shortest round-trip float
rendering, no locale anywhere, trailing newline.  Serializing the same
report twice must yield identical bytes — downstream tooling diffs these
files directly.
"""

from __future__ import annotations

import json
from typing import Any

from .domain import SimulationReport, TransitionEvent


def event_to_dict(event: TransitionEvent) -> dict[str, Any]:
    return {
        "overtakerId": event.overtaker_id,
        "overtakenId": event.overtaken_id,
        "fromLane": event.from_lane,
        "toLane": event.to_lane,
        "catchUpTicks": event.catch_up_ticks,
    }


def report_to_dict(report: SimulationReport) -> dict[str, Any]:
    return {
        "algorithm": report.algorithm,
        "countingMode": report.counting_mode,
        "laneCount": report.lane_count,
        "transitionCount": report.transition_count,
        "events": [event_to_dict(e) for e in report.events],
        "laneAverageSpeed": {str(lane): float(avg) for lane, avg in report.lane_average_speed.items()},
        "lanePopulation": {str(lane): pop for lane, pop in report.lane_population.items()},
    }


def canonical_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), allow_nan=False) + "\n"


def render_report(report: SimulationReport) -> str:
    return canonical_json(report_to_dict(report))
