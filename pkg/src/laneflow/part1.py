"""Speed-class lane planner: one lane per distinct class, then a count of
predicted overtaking transitions.

A transition is predicted for every ordered pair of vehicles that share a
lane where the follower is strictly faster and did not arrive earlier than
the leader.  Two counting modes exist because "number of overtakes" can be
read two ways:

* event   - one transition per pair, stamped with its catch-up tick
* literal - per pair, every tick the follower is still at or behind the
            leader is counted (see kinematics.literal_overtake_count)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .domain import LanePlan, SimulationReport, TransitionEvent, VehicleRecord
from .errors import EmptyStream, NoAdjacentLane, PlanHasNoAdjacentLane
from .kinematics import (
    OvertakePair,
    catch_up_ticks,
    exact,
    literal_overtake_count,
    transition_target,
)

COUNTING_MODES = ("event", "literal")


@dataclass(frozen=True)
class OvertakePairing:
    """A qualifying (leader, follower) pair and the lane they share."""

    slow: VehicleRecord
    fast: VehicleRecord
    lane: int

    def kinematics(self) -> OvertakePair:
        return OvertakePair(
            slow_speed=self.slow.speed,
            fast_speed=self.fast.speed,
            head_start=self.fast.arrival - self.slow.arrival,
        )


def build_lane_plan(vehicles: list[VehicleRecord]) -> LanePlan:
    """Assign one lane per distinct speed class, in first-appearance order."""
    if not vehicles:
        raise EmptyStream("cannot plan lanes for an empty stream")
    lane_of_class: dict[int, int] = {}
    lane_class: dict[int, int] = {}
    assignment: dict[str, int] = {}
    for v in vehicles:
        if v.id in assignment:
            raise ValueError(f"duplicate vehicle id {v.id!r}")
        cls = v.speed_class
        if cls not in lane_of_class:
            lane = len(lane_of_class) + 1
            lane_of_class[cls] = lane
            lane_class[lane] = cls
        assignment[v.id] = lane_of_class[cls]
    return LanePlan(lane_count=len(lane_class), assignment=assignment, lane_class=lane_class)


def _enumerate_pairs(
    vehicles: list[VehicleRecord], lane_of: Mapping[str, int]
) -> list[OvertakePairing]:
    pairs: list[OvertakePairing] = []
    for slow in vehicles:
        slow_lane = lane_of[slow.id]
        for fast in vehicles:
            if fast is slow:
                continue
            if (
                lane_of[fast.id] == slow_lane
                and slow.speed < fast.speed
                and slow.arrival <= fast.arrival
            ):
                pairs.append(OvertakePairing(slow=slow, fast=fast, lane=slow_lane))
    return pairs


def enumerate_overtake_pairs(
    vehicles: list[VehicleRecord], plan: LanePlan
) -> list[OvertakePairing]:
    """Every ordered same-lane pair with a strictly faster, no-earlier follower.

    Pairs come back lexicographically by (leader position, follower position)
    in the input stream, which keeps downstream event lists deterministic.
    """
    return _enumerate_pairs(vehicles, plan.assignment)


def count_transitions(
    pairings: Iterable[OvertakePairing],
    lane_count: int,
    mode: str = "event",
    interior: str = "lower",
) -> tuple[int, tuple[TransitionEvent, ...]]:
    """Turn qualifying pairs into a transition count (and events, in event mode).

    A plan with a single lane cannot host any transition: if pairs exist the
    situation is contradictory and PlanHasNoAdjacentLane is raised.
    """
    if mode not in COUNTING_MODES:
        raise ValueError(f"unknown counting mode {mode!r}")
    pairings = list(pairings)
    if pairings and lane_count == 1:
        raise PlanHasNoAdjacentLane(
            "overtaking pairs exist but the plan holds a single lane"
        )
    if mode == "literal":
        total = sum(literal_overtake_count(p.kinematics()) for p in pairings)
        return total, ()
    events = []
    for p in pairings:
        try:
            target = transition_target(p.lane, lane_count, interior)
        except NoAdjacentLane as err:  # defensive: guarded above
            raise PlanHasNoAdjacentLane(str(err)) from err
        events.append(
            TransitionEvent(
                overtaker_id=p.fast.id,
                overtaken_id=p.slow.id,
                from_lane=p.lane,
                to_lane=target,
                catch_up_ticks=catch_up_ticks(p.kinematics()),
            )
        )
    return len(events), tuple(events)


def lane_statistics(
    vehicles: list[VehicleRecord], lane_of: Mapping[str, int], lane_count: int
) -> tuple[dict[int, float], dict[int, int]]:
    """Per-lane mean speed and population, averaged exactly then floated."""
    totals: dict[int, Fraction | int] = {lane: 0 for lane in range(1, lane_count + 1)}
    members: dict[int, int] = {lane: 0 for lane in range(1, lane_count + 1)}
    for v in vehicles:
        lane = lane_of[v.id]
        totals[lane] += exact(v.speed)
        members[lane] += 1
    averages = {
        lane: float(Fraction(totals[lane]) / members[lane])
        for lane in totals
        if members[lane]
    }
    return averages, members


def simulate_part1(
    vehicles: list[VehicleRecord], mode: str = "event", interior: str = "lower"
) -> SimulationReport:
    """Plan lanes by speed class and count overtaking transitions."""
    plan = build_lane_plan(vehicles)
    pairs = enumerate_overtake_pairs(vehicles, plan)
    count, events = count_transitions(pairs, plan.lane_count, mode, interior)
    averages, populations = lane_statistics(vehicles, plan.assignment, plan.lane_count)
    return SimulationReport(
        algorithm="part1",
        counting_mode=mode,
        lane_count=plan.lane_count,
        transition_count=count,
        events=events,
        lane_average_speed=averages,
        lane_population=populations,
    )
