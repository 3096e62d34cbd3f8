"""Deterministic point-set generation on a dyadic grid.

Coordinates are fractions k / 2^32; collisions and collinear triples are
repaired by resampling, so every generated set passes general-position
validation. Identical (n, seed, distribution) always yields an identical
set.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .geometry import Point, PointSet, validate_general_position

GRID_BITS = 32
GRID = 1 << GRID_BITS


def _fresh_coord(rng, used) -> int:
    while True:
        k = rng.getrandbits(GRID_BITS)
        if k not in used:
            used.add(k)
            return k


def _int_gauss(rng, spread: int) -> int:
    # sum of uniform steps: deterministic integer bell-shaped offset
    return sum(rng.randrange(-spread, spread + 1) for _ in range(6)) // 3


def generate_points(n: int, seed: int, distribution: str = "uniform") -> PointSet:
    if n < 2:
        raise ValueError("need n >= 2")
    if distribution not in ("uniform", "clustered"):
        raise ValueError(f"unknown distribution {distribution!r}")
    rng = random.Random(seed)
    used_x: set = set()
    used_y: set = set()
    coords: list[tuple[int, int]] = []

    def sample_point() -> tuple[int, int]:
        if distribution == "uniform":
            return _fresh_coord(rng, used_x), _fresh_coord(rng, used_y)
        cx, cy = centers[rng.randrange(len(centers))]
        spread = GRID >> 6
        while True:
            x = (cx + _int_gauss(rng, spread)) % GRID
            if x not in used_x:
                used_x.add(x)
                break
        while True:
            y = (cy + _int_gauss(rng, spread)) % GRID
            if y not in used_y:
                used_y.add(y)
                break
        return x, y

    if distribution == "clustered":
        n_centers = max(1, n // 10)
        centers = [(rng.getrandbits(GRID_BITS), rng.getrandbits(GRID_BITS))
                   for _ in range(n_centers)]

    for _ in range(n):
        coords.append(sample_point())

    while True:
        ps = PointSet(Point(Fraction(x, GRID), Fraction(y, GRID)) for x, y in coords)
        report = validate_general_position(ps)
        if report.ok:
            return ps
        # resample one participant of the first collinear triple
        i = report.collinear[0][2]
        used_x.discard(coords[i][0])
        used_y.discard(coords[i][1])
        coords[i] = sample_point()
