"""Exception types shared across the package.

Everything raised deliberately by laneflow derives from LaneflowError, so
callers (and the CLI) can split "the model rejected your input" from plain
bugs.  Parse-level problems carry a 1-based line/column where known.
"""

from __future__ import annotations


class LaneflowError(Exception):
    """Base class for all errors raised on purpose by this package."""


class SpeedOutOfModel(LaneflowError):
    """Speed outside the modeled open interval (0, 101) km/h."""


class EmptyStream(LaneflowError):
    """An operation that needs at least one vehicle got none."""


class NoAdjacentLane(LaneflowError):
    """A one-lane layout has no adjacent lane to move into."""


class PlanHasNoAdjacentLane(LaneflowError):
    """The plan produced overtaking pairs but only a single lane exists."""


class InvalidBudget(LaneflowError):
    """Lane budget must be a positive integer."""


class InvalidSampleSize(LaneflowError):
    """Sample size must be a positive integer."""


class DegenerateDistribution(LaneflowError):
    """Class counts are unusable: empty, or all zero."""


class DegenerateFit(LaneflowError):
    """A trend fit needs at least two distinct x values."""


class ConfigError(LaneflowError):
    """Invalid or incomplete synthesis/ensemble configuration."""


class RowUnusable(LaneflowError):
    """Census row contains missing cells and cannot drive sampling."""


class ParseError(LaneflowError):
    """Malformed input text.

    line and column are 1-based and optional; str() renders them when set.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)
