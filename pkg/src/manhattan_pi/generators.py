"""Digital circle construction.

The signum construction walks the first quadrant from (r, 0) to (0, r) one
lattice edge at a time. At every corner it either moves left or up, picking
the candidate whose radial (Euclidean) gap to the ideal circle is smaller.
Both candidates only depend on the current Manhattan distance to the centre
``a = x + y`` and on ``c = r - n - 1``, so the walk can be driven by ``a``
alone.

Bresenham, Midpoint and the l1 "diamond" are provided as reference point sets
for comparison.
"""

import math
import warnings
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .lattice import MAX_COORD, ArithmeticRangeError, LatticePoint

SQRT2 = math.sqrt(2)


class InvalidRadiusError(ValueError):
    pass


class InvalidPathError(ValueError):
    pass


class SmallRadiusWarning(UserWarning):
    """The integer cost is only vouched for when r > 4."""


class CostMode(Enum):
    EXACT = "exact"
    APPROXIMATE = "approx"


class Algorithm(Enum):
    SIGNUM = "signum"
    BRESENHAM = "bresenham"
    MIDPOINT = "midpoint"
    L1DIAMOND = "l1diamond"


def _as_coords(points) -> np.ndarray:
    arr = np.asarray(points, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        arr = arr.reshape(-1, 2)
    return arr


def _points(coords: np.ndarray) -> list[LatticePoint]:
    return [LatticePoint(int(x), int(y)) for x, y in coords]


@dataclass(frozen=True, eq=False)
class QuarterPath:
    """First-quadrant signum path: 2r+1 points, 2r step signs.

    ``coords`` is an ``(2r+1, 2)`` int64 array; ``step_signs[n]`` is +1 for an
    up-move and -1 for a left-move out of point ``n``.
    """

    radius: int
    coords: np.ndarray = field(repr=False)
    step_signs: np.ndarray = field(repr=False)
    cost_mode: CostMode = CostMode.APPROXIMATE

    @property
    def xs(self) -> np.ndarray:
        return self.coords[:, 0]

    @property
    def ys(self) -> np.ndarray:
        return self.coords[:, 1]

    @property
    def points(self) -> list[LatticePoint]:
        return _points(self.coords)

    def __len__(self):
        return len(self.coords)


@dataclass(frozen=True, eq=False)
class FullCirclePath:
    radius: int
    coords: np.ndarray = field(repr=False)

    @property
    def points(self) -> list[LatticePoint]:
        return _points(self.coords)

    def __len__(self):
        return len(self.coords)


@dataclass(frozen=True, eq=False)
class GenericDigitalPath:
    radius: int
    coords: np.ndarray = field(repr=False)
    algorithm: Algorithm

    @property
    def points(self) -> list[LatticePoint]:
        return _points(self.coords)

    def __len__(self):
        return len(self.coords)


def check_radius(r) -> int:
    if isinstance(r, bool) or not isinstance(r, (int, np.integer)):
        raise InvalidRadiusError(f"radius must be an integer, got {r!r}")
    r = int(r)
    if r < 1:
        raise InvalidRadiusError(f"radius must be >= 1, got {r}")
    if r > MAX_COORD:
        raise ArithmeticRangeError(f"radius {r} exceeds 2**30")
    return r


def sgn(t) -> int:
    """Sign with sgn(0) = -1."""
    return 1 if t > 0 else -1


def segment_distances(p, r: int) -> tuple[float, float]:
    """Radial gaps to the circle of the left candidate and the up candidate."""
    x, y = p
    d1 = abs(r - math.sqrt((x - 1) ** 2 + y * y))
    d2 = abs(r - math.sqrt(x * x + (y + 1) ** 2))
    return d1, d2


def _exact_arg(a: int, c: int, r: int) -> float:
    return a + r / SQRT2 * (math.sqrt((a - 1) ** 2 + c * c) - math.sqrt((a + 1) ** 2 + c * c))


def sign_step(p, n: int, r: int, mode: CostMode = CostMode.APPROXIMATE) -> int:
    """Step sign s_n taken out of point ``p`` (the n-th point of the path)."""
    a = p[0] + p[1]
    c = r - n - 1
    if mode is CostMode.EXACT:
        return -sgn(_exact_arg(a, c, r))
    return -sgn(a * a + c * c + 1 - 2 * r * r)


def _signs_approx(r: int) -> list[int]:
    signs = [0] * (2 * r)
    bound = 2 * r * r - 1
    a = r
    c = r - 1
    for n in range(2 * r):
        # s = -sgn(a^2 + c^2 + 1 - 2r^2); sgn(0) = -1 sends ties upward
        s = 1 if a * a + c * c <= bound else -1
        signs[n] = s
        a += s
        c -= 1
    return signs


def _signs_exact(r: int) -> list[int]:
    signs = [0] * (2 * r)
    k = r / SQRT2
    sqrt = math.sqrt
    a = r
    c = r - 1
    for n in range(2 * r):
        c2 = c * c
        t = a + k * (sqrt((a - 1) ** 2 + c2) - sqrt((a + 1) ** 2 + c2))
        s = -1 if t > 0 else 1
        signs[n] = s
        a += s
        c -= 1
    return signs


def generate_quarter(r: int, mode: CostMode = CostMode.APPROXIMATE) -> QuarterPath:
    """Build the first-quadrant signum path of radius ``r``."""
    r = check_radius(r)
    mode = CostMode(mode)
    if mode is CostMode.APPROXIMATE and r <= 4:
        warnings.warn(
            f"integer cost at r={r} (<= 4) may differ from the exact cost",
            SmallRadiusWarning,
            stacklevel=2,
        )
    signs = np.array(_signs_exact(r) if mode is CostMode.EXACT else _signs_approx(r), dtype=np.int8)
    steps = signs.astype(np.int64)
    coords = np.empty((2 * r + 1, 2), dtype=np.int64)
    coords[0] = (r, 0)
    coords[1:, 0] = r + np.cumsum((steps - 1) // 2)
    coords[1:, 1] = np.cumsum((steps + 1) // 2)
    return QuarterPath(r, coords, signs, mode)


def check_quarter(q: QuarterPath) -> None:
    """Raise InvalidPathError unless ``q`` satisfies every quarter-path invariant."""
    r = q.radius
    c = np.asarray(q.coords)
    s = np.asarray(q.step_signs)
    if c.shape != (2 * r + 1, 2) or s.shape != (2 * r,):
        raise InvalidPathError(f"expected {2 * r + 1} points and {2 * r} signs")
    if tuple(c[0]) != (r, 0) or tuple(c[-1]) != (0, r):
        raise InvalidPathError("quarter path must run from (r, 0) to (0, r)")
    d = np.diff(c, axis=0)
    left = (d[:, 0] == -1) & (d[:, 1] == 0)
    up = (d[:, 0] == 0) & (d[:, 1] == 1)
    if not np.all(left | up):
        bad = int(np.argmin(left | up))
        raise InvalidPathError(f"step {bad} is neither a left nor an up move")
    if not np.array_equal(np.where(up, 1, -1), s):
        raise InvalidPathError("step signs disagree with the point sequence")


def _rot90(coords: np.ndarray) -> np.ndarray:
    # (x, y) -> (-y, x)
    return np.column_stack((-coords[:, 1], coords[:, 0]))


def expand_full(q: QuarterPath) -> FullCirclePath:
    """Rotate the quarter into all four quadrants, giving a closed 8r-cycle."""
    check_quarter(q)
    quarter = np.asarray(q.coords)[:-1]
    parts = [quarter]
    for _ in range(3):
        parts.append(_rot90(parts[-1]))
    return FullCirclePath(q.radius, np.concatenate(parts))


def _octant_bresenham(r: int):
    x, y, d = 0, r, 3 - 2 * r
    while x <= y:
        yield x, y
        if d < 0:
            d += 4 * x + 6
        else:
            d += 4 * (x - y) + 10
            y -= 1
        x += 1


def _octant_midpoint(r: int):
    x, y, p = 0, r, 1 - r
    while x <= y:
        yield x, y
        x += 1
        if p < 0:
            p += 2 * x + 1
        else:
            y -= 1
            p += 2 * (x - y) + 1


def _mirror8(octant) -> set[tuple[int, int]]:
    pts = set()
    for x, y in octant:
        for u, v in ((x, y), (y, x)):
            pts.update(((u, v), (-u, v), (u, -v), (-u, -v)))
    return pts


def _ccw(pts) -> np.ndarray:
    arr = np.array(sorted(pts), dtype=np.int64)
    angle = np.mod(np.arctan2(arr[:, 1], arr[:, 0]), 2 * np.pi)
    return arr[np.argsort(angle, kind="stable")]


def _diamond(r: int) -> np.ndarray:
    k = np.arange(r, dtype=np.int64)
    quarter = np.column_stack((r - k, k))
    parts = [quarter]
    for _ in range(3):
        parts.append(_rot90(parts[-1]))
    return np.concatenate(parts)


def generate_reference(r: int, algorithm: Algorithm) -> GenericDigitalPath:
    """Full-circle point set of a reference algorithm, counterclockwise from (r, 0)."""
    r = check_radius(r)
    algorithm = Algorithm(algorithm)
    if algorithm is Algorithm.BRESENHAM:
        coords = _ccw(_mirror8(_octant_bresenham(r)))
    elif algorithm is Algorithm.MIDPOINT:
        coords = _ccw(_mirror8(_octant_midpoint(r)))
    elif algorithm is Algorithm.L1DIAMOND:
        coords = _diamond(r)
    else:
        raise ValueError("use generate_quarter/expand_full for the signum path")
    return GenericDigitalPath(r, coords, algorithm)


def step_lengths(points, closed: bool = False) -> np.ndarray:
    """l1 length of each consecutive step (wrapping around when ``closed``)."""
    c = _as_coords(points)
    nxt = np.roll(c, -1, axis=0) if closed else c[1:]
    d = nxt - c[: len(nxt)]
    return np.abs(d).sum(axis=1)


def diagonal_steps(points, closed: bool = False) -> int:
    c = _as_coords(points)
    nxt = np.roll(c, -1, axis=0) if closed else c[1:]
    d = np.abs(nxt - c[: len(nxt)])
    return int(np.count_nonzero((d[:, 0] == 1) & (d[:, 1] == 1)))


def is_valid_path(points, closed: bool = False) -> tuple[bool, int | None]:
    """Whether every consecutive pair is one lattice edge apart.

    Returns ``(valid, index)`` where ``index`` is the first step ``n`` (from
    point ``n`` to ``n + 1``) that is not a unit step, or None.
    """
    lengths = step_lengths(points, closed)
    bad = np.flatnonzero(lengths != 1)
    if bad.size:
        return False, int(bad[0])
    return True, None
