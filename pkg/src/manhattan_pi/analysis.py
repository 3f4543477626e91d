"""Partial sums of the step signs, angle discretization and the arcsin series."""

import math
from dataclasses import dataclass, field

import numpy as np

from .lattice import ArithmeticRangeError
from .generators import QuarterPath, check_quarter, check_radius


@dataclass(frozen=True, eq=False)
class PartialSums:
    radius: int
    values: np.ndarray = field(repr=False)


@dataclass(frozen=True, eq=False)
class AngleProfile:
    radius: int
    phi: np.ndarray = field(repr=False)
    phi_uniform: np.ndarray = field(repr=False)
    deviation: np.ndarray = field(repr=False)


def partial_sums(q: QuarterPath) -> PartialSums:
    check_quarter(q)
    return PartialSums(q.radius, np.cumsum(np.asarray(q.step_signs, dtype=np.int64)))


def closed_form_S(n: int, r: int) -> float:
    """Smooth approximation sqrt(r^2 + 2(n+1)r - (n+1)^2) - r of the partial sum S_n."""
    if not 0 <= n <= 2 * r - 1:
        raise ValueError(f"index {n} outside [0, {2 * r - 1}]")
    m = n + 1
    radicand = r * r + 2 * m * r - m * m
    if radicand < 0:
        raise ValueError("negative radicand")
    return math.sqrt(radicand) - r


def angle_at(n: int, r: int) -> float:
    """Angle on the ideal circle associated with path index ``n``, in [0, pi/2]."""
    root = r * math.sqrt(r * r + 2 * n * r - n * n)
    num = n * r - r * r + root
    den = r * r - n * r + root
    if den <= 0:
        return math.pi / 2
    return math.atan(num / den)


def angle_profile(r: int) -> AngleProfile:
    r = check_radius(r)
    n = np.arange(2 * r, dtype=np.float64)
    rf = float(r)
    root = rf * np.sqrt(rf * rf + 2 * n * rf - n * n)
    num = n * rf - rf * rf + root
    den = rf * rf - n * rf + root
    with np.errstate(divide="ignore", invalid="ignore"):
        phi = np.where(den > 0, np.arctan(num / den), np.pi / 2)
    uniform = n * np.pi / (4 * r)
    return AngleProfile(r, phi, uniform, phi - uniform)


def arcsin_series_terms(k_max: int) -> list[float]:
    """Terms 4 * binom(2k,k) / 4^k / (2k+1) * (1/sqrt 2)^(2k+1), k = 0..k_max."""
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    terms = []
    central = 1.0  # binom(2k, k) / 4^k
    power = 1 / math.sqrt(2)  # (1/sqrt 2)^(2k+1)
    for k in range(k_max + 1):
        if power == 0.0:
            raise ArithmeticRangeError(f"series term underflows at k={k}")
        terms.append(4 * central * power / (2 * k + 1))
        central *= (2 * k + 1) / (2 * k + 2)
        power *= 0.5
    return terms


def arcsin_series_partial(k_max: int) -> float:
    """Partial sum of the arcsin expansion of 4*asin(1/sqrt 2); tends to pi."""
    return math.fsum(arcsin_series_terms(k_max))


def a_n_decomposition_check(q: QuarterPath) -> bool:
    """True iff a_0 = r and a_n = r + S_{n-1} for every n in [1, 2r-1]."""
    r = q.radius
    coords = np.asarray(q.coords)[: 2 * r]
    a = coords[:, 0] + coords[:, 1]
    if a[0] != r:
        return False
    s = np.cumsum(np.asarray(q.step_signs, dtype=np.int64))
    return bool(np.array_equal(a[1:], r + s[: 2 * r - 1]))
