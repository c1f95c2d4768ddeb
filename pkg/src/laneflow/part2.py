"""Population-knowledge-base planner.

Instead of fixed speed-class bands, lanes are grown from the traffic itself
under a lane budget.  Each lane keeps the speeds assigned to it (its buffer)
and their running average.  A vehicle is placed by three rules, first match
wins:

1. exact   - some lane already holds this exact speed: lowest such lane
2. grow    - the budget still allows a new lane: open one for this speed
3. nearest - otherwise, the lane whose average is closest to the speed
             (ties go to the lowest-indexed lane)

Assignment folds over vehicles in arrival order (ties broken by input
position).  The knowledge base is immutable: every assignment returns a new
one, so partial folds can be kept, replayed, or compared.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .domain import SimulationReport, VehicleRecord
from .errors import EmptyStream, InvalidBudget
from .kinematics import exact
from .part1 import _enumerate_pairs, build_lane_plan, count_transitions


@dataclass(frozen=True)
class LaneState:
    """One grown lane: the speeds it holds and their exact average."""

    index: int
    buffer: tuple[int | float, ...]
    average: Fraction

    @property
    def population(self) -> int:
        return len(self.buffer)

    def admit(self, speed: int | float) -> "LaneState":
        # incremental mean: (avg * n + v) / (n + 1), exact in rationals
        n = len(self.buffer)
        new_avg = (self.average * n + exact(speed)) / (n + 1)
        return LaneState(index=self.index, buffer=self.buffer + (speed,), average=new_avg)


@dataclass(frozen=True)
class KnowledgeBase:
    """All lanes grown so far, the budget, and formation bookkeeping.

    formation_cursor is 0 while lanes may still be opened; once the final
    budgeted lane opens it freezes at the number of vehicles assigned up to
    and including that one.
    """

    lanes: tuple[LaneState, ...]
    budget: int
    formation_cursor: int = 0
    assigned: int = 0  # total vehicles folded in so far

    @property
    def lane_count(self) -> int:
        return len(self.lanes)


def kb_new(budget: int) -> KnowledgeBase:
    """Fresh knowledge base; the budget must allow at least one lane."""
    if not isinstance(budget, int) or isinstance(budget, bool) or budget < 1:
        raise InvalidBudget(f"lane budget must be a positive integer, got {budget!r}")
    return KnowledgeBase(lanes=(), budget=budget)


def kb_assign(kb: KnowledgeBase, vehicle: VehicleRecord) -> tuple[KnowledgeBase, int]:
    """Place one vehicle; returns the successor knowledge base and the lane index."""
    speed = vehicle.speed
    assigned = kb.assigned + 1

    # 1. exact: lowest-indexed lane whose buffer already holds this speed
    for lane in kb.lanes:
        if speed in lane.buffer:
            lanes = tuple(
                lane.admit(speed) if ln.index == lane.index else ln for ln in kb.lanes
            )
            return replace(kb, lanes=lanes, assigned=assigned), lane.index

    # 2. grow: open a new lane while the budget allows it
    if kb.lane_count < kb.budget:
        new_lane = LaneState(index=kb.lane_count + 1, buffer=(speed,), average=Fraction(exact(speed)))
        cursor = assigned if kb.lane_count + 1 == kb.budget else kb.formation_cursor
        return (
            replace(kb, lanes=kb.lanes + (new_lane,), formation_cursor=cursor, assigned=assigned),
            new_lane.index,
        )

    # 3. nearest average, ties to the lowest index
    if not kb.lanes:  # cannot happen: budget >= 1 makes rule 2 fire first
        raise RuntimeError("internal inconsistency: no lanes to place a vehicle into")
    exact_speed = exact(speed)
    best = kb.lanes[0]
    best_gap = abs(exact_speed - best.average)
    for lane in kb.lanes[1:]:
        gap = abs(exact_speed - lane.average)
        if gap < best_gap:
            best, best_gap = lane, gap
    lanes = tuple(lane.admit(speed) if lane.index == best.index else lane for lane in kb.lanes)
    return replace(kb, lanes=lanes, assigned=assigned), best.index


def budget_from_part1(vehicles: list[VehicleRecord]) -> int:
    """Default budget: the lane count the speed-class planner would use."""
    return build_lane_plan(vehicles).lane_count


def assign_stream(
    vehicles: list[VehicleRecord], budget: int
) -> tuple[KnowledgeBase, dict[str, int]]:
    """Fold the whole stream in arrival order; returns (kb, id -> lane index)."""
    if not vehicles:
        raise EmptyStream("cannot grow a knowledge base from an empty stream")
    kb = kb_new(budget)
    assignment: dict[str, int] = {}
    for v in sorted(vehicles, key=lambda v: v.arrival):  # stable: input order on ties
        if v.id in assignment:
            raise ValueError(f"duplicate vehicle id {v.id!r}")
        kb, lane = kb_assign(kb, v)
        assignment[v.id] = lane
    return kb, assignment


def simulate_part2(
    vehicles: list[VehicleRecord],
    budget: int,
    mode: str = "event",
    interior: str = "lower",
) -> SimulationReport:
    """Grow lanes under a budget, then count transitions as the class planner does,
    with "same lane" meaning "same grown lane"."""
    kb, assignment = assign_stream(vehicles, budget)
    pairs = _enumerate_pairs(vehicles, assignment)
    count, events = count_transitions(pairs, kb.lane_count, mode, interior)
    return SimulationReport(
        algorithm="part2",
        counting_mode=mode,
        lane_count=kb.lane_count,
        transition_count=count,
        events=events,
        lane_average_speed={lane.index: float(lane.average) for lane in kb.lanes},
        lane_population={lane.index: lane.population for lane in kb.lanes},
    )
