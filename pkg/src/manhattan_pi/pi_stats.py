"""Per-corner pi values along a quarter path and their means.

Along a signum quarter path every corner ``n`` has a Manhattan distance
``a_n`` to the centre, and the full circle has ``8r`` edges. The ratio
``pi_n = 4r / a_n`` (circumference over twice the distance) varies between
about 2*sqrt(2) and 4. Its arithmetic mean tends to pi. The arithmetic mean of
``1 / pi_n`` tends to pi/16 + 1/8, so the harmonic mean tends to 16 / (pi + 2).

Only indices ``0 .. 2r-1`` are used. The endpoint (0, r) is the first point of
the next quadrant.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .generators import CostMode, InvalidRadiusError, QuarterPath, check_quarter, generate_quarter

RECIPROCAL_LIMIT = math.pi / 16 + 1 / 8
HARMONIC_LIMIT = 16 / (math.pi + 2)


@dataclass(frozen=True, eq=False)
class PiSequence:
    radius: int
    a: np.ndarray = field(repr=False)
    pi_values: np.ndarray = field(repr=False)

    def __len__(self):
        return len(self.a)


@dataclass(frozen=True)
class MeanReport:
    radius: int
    arithmetic_mean: float
    harmonic_mean: float
    reciprocal_mean: float
    abs_error_to_pi: float
    identity_residual: float


@dataclass(frozen=True)
class ConvergenceTable:
    rows: tuple[MeanReport, ...]

    @property
    def radii(self) -> list[int]:
        return [row.radius for row in self.rows]


def pi_sequence(q: QuarterPath) -> PiSequence:
    check_quarter(q)
    r = q.radius
    coords = np.asarray(q.coords)[:-1]
    # first quadrant: |x| + |y| == x + y
    a = coords[:, 0] + coords[:, 1]
    return PiSequence(r, a, 4 * r / a)


def arithmetic_mean_pi(s: PiSequence) -> float:
    """Mean of pi_n, evaluated as 2 * sum(1 / a_n) with an exactly rounded sum."""
    if len(s) == 0:
        raise ValueError("empty sequence")
    return 2 * math.fsum((1.0 / s.a).tolist())


def reciprocal_mean(s: PiSequence) -> float:
    """Mean of 1 / pi_n = sum(a_n) / (8 r^2); the integer sum is exact."""
    if len(s) == 0:
        raise ValueError("empty sequence")
    total = int(np.sum(s.a, dtype=np.int64))
    return total / (8 * s.radius * s.radius)


def harmonic_mean_pi(s: PiSequence) -> float:
    return 1 / reciprocal_mean(s)


def identity_residual(s: PiSequence) -> float:
    am = arithmetic_mean_pi(s)
    hm = harmonic_mean_pi(s)
    return am * hm + 2 * hm - 16


def mean_report(s: PiSequence) -> MeanReport:
    am = arithmetic_mean_pi(s)
    rm = reciprocal_mean(s)
    hm = 1 / rm
    return MeanReport(
        radius=s.radius,
        arithmetic_mean=am,
        harmonic_mean=hm,
        reciprocal_mean=rm,
        abs_error_to_pi=abs(am - math.pi),
        identity_residual=am * hm + 2 * hm - 16,
    )


def convergence_table(radii, mode: CostMode = CostMode.APPROXIMATE) -> ConvergenceTable:
    radii = list(radii)
    if not radii:
        raise InvalidRadiusError("no radii given")
    if any(b <= a for a, b in zip(radii, radii[1:])):
        raise InvalidRadiusError("radii must be strictly increasing")
    rows = tuple(mean_report(pi_sequence(generate_quarter(r, mode))) for r in radii)
    return ConvergenceTable(rows)
