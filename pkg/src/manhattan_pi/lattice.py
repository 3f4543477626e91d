"""Lattice points on Z^2 and the two metrics used throughout the package."""

from enum import Enum
from typing import NamedTuple

# Coordinates up to this magnitude keep every intermediate of the integer
# step test (a^2 + c^2 + 1 - 2 r^2, about 2**61) inside a signed 64-bit word.
MAX_COORD = 2**30


class ArithmeticRangeError(ArithmeticError):
    """A value left the range in which integer arithmetic is guaranteed exact."""


class LatticePoint(NamedTuple):
    x: int
    y: int


def check_coord(value: int) -> int:
    if abs(value) > MAX_COORD:
        raise ArithmeticRangeError(f"coordinate {value} exceeds +/-2**30")
    return value


def _diffs(p, q):
    for v in (p[0], p[1], q[0], q[1]):
        check_coord(v)
    return p[0] - q[0], p[1] - q[1]


def l1_distance(p: LatticePoint, q: LatticePoint) -> int:
    """Manhattan (taxicab) distance |p.x - q.x| + |p.y - q.y|."""
    dx, dy = _diffs(p, q)
    return abs(dx) + abs(dy)


def l2_distance_squared(p: LatticePoint, q: LatticePoint) -> int:
    """Squared Euclidean distance, kept integral."""
    dx, dy = _diffs(p, q)
    return dx * dx + dy * dy


class Metric(Enum):
    MANHATTAN = "manhattan"
    EUCLIDEAN_SQUARED = "euclidean_squared"

    def distance(self, p: LatticePoint, q: LatticePoint) -> int:
        if self is Metric.MANHATTAN:
            return l1_distance(p, q)
        return l2_distance_squared(p, q)
