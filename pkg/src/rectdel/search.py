"""Exploratory search for high-stretch configurations.

Random restarts plus single-coordinate hill climbing on the generation grid.
The schedule constants are fixed and recorded in the result so runs are
reproducible; the best ratio found is reported, never asserted to approach
the tight bound.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .analysis import bound_formula, max_stretch
from .delaunay import build_triangulation
from .errors import RectDelError
from .generate import GRID
from .geometry import AspectRatio, Point, PointSet, format_rational, validate_general_position

SCHEDULE = {
    "initial_step_fraction": 8,   # first step = grid span / 8
    "step_decay": 0.7,
    "stale_limit": 40,            # failures before the step shrinks
    "min_step": 1,
}


@dataclass
class SearchResult:
    aspect: str
    n: int
    budget: int
    seed: int
    best_ratio: float
    sigma: float
    evaluations: int
    restarts: int
    schedule: dict = field(default_factory=dict)
    points: list = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps({
            "aspect": self.aspect,
            "n": self.n,
            "budget": self.budget,
            "seed": self.seed,
            "best_ratio": self.best_ratio,
            "sigma": self.sigma,
            "evaluations": self.evaluations,
            "restarts": self.restarts,
            "schedule": self.schedule,
            "points": self.points,
        }, sort_keys=True, indent=2) + "\n"


def _coords_to_set(coords) -> PointSet:
    return PointSet(Point(Fraction(x, GRID), Fraction(y, GRID)) for x, y in coords)


def _random_coords(rng, n):
    while True:
        xs = set()
        ys = set()
        coords = []
        for _ in range(n):
            while True:
                x = rng.getrandbits(32)
                if x not in xs:
                    xs.add(x)
                    break
            while True:
                y = rng.getrandbits(32)
                if y not in ys:
                    ys.add(y)
                    break
            coords.append((x, y))
        if validate_general_position(_coords_to_set(coords)).ok:
            return coords


def worst_case_search(aspect: AspectRatio, n: int, budget: int, seed: int) -> tuple[PointSet, SearchResult]:
    """Deterministic hill-climbing search; returns the best set found."""
    if budget < 1:
        raise ValueError("budget must be >= 1")
    rng = random.Random(seed)
    sigma = bound_formula(aspect)

    def evaluate(coords) -> float:
        T = build_triangulation(_coords_to_set(coords), aspect)
        return max_stretch(T)

    evaluations = 0
    restarts = 0
    best_coords = None
    best_ratio = -1.0

    cur = _random_coords(rng, n)
    cur_ratio = evaluate(cur)
    evaluations += 1
    step = GRID // SCHEDULE["initial_step_fraction"]
    stale = 0
    if cur_ratio > best_ratio:
        best_ratio, best_coords = cur_ratio, list(cur)

    while evaluations < budget:
        i = rng.randrange(n)
        axis = rng.randrange(2)
        delta = step if rng.randrange(2) == 0 else -step
        cand = list(cur)
        x, y = cand[i]
        if axis == 0:
            cand[i] = ((x + delta) % GRID, y)
        else:
            cand[i] = (x, (y + delta) % GRID)
        evaluations += 1
        ps = _coords_to_set(cand)
        if not validate_general_position(ps).ok:
            stale += 1
        else:
            try:
                ratio = max_stretch(build_triangulation(ps, aspect))
            except RectDelError:
                ratio = -1.0
            if ratio > cur_ratio:
                cur, cur_ratio = cand, ratio
                stale = 0
                if ratio > best_ratio:
                    best_ratio, best_coords = ratio, list(cand)
            else:
                stale += 1
        if stale >= SCHEDULE["stale_limit"]:
            stale = 0
            new_step = max(SCHEDULE["min_step"], int(step * SCHEDULE["step_decay"]))
            if new_step == step == SCHEDULE["min_step"]:
                if evaluations >= budget:
                    break
                restarts += 1
                cur = _random_coords(rng, n)
                cur_ratio = evaluate(cur)
                evaluations += 1
                step = GRID // SCHEDULE["initial_step_fraction"]
                if cur_ratio > best_ratio:
                    best_ratio, best_coords = cur_ratio, list(cur)
            else:
                step = new_step

    best = _coords_to_set(best_coords)
    result = SearchResult(
        aspect=str(aspect), n=n, budget=budget, seed=seed,
        best_ratio=best_ratio, sigma=sigma,
        evaluations=evaluations, restarts=restarts,
        schedule=dict(SCHEDULE),
        points=[{"x": format_rational(p.x), "y": format_rational(p.y)} for p in best],
    )
    return best, result
