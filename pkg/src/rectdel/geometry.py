"""Exact-rational planar primitives for rectangle Delaunay constructions.

Every coordinate is a `fractions.Fraction`, every predicate is an exact
decision. Irrational quantities (Euclidean lengths) only appear as binary64
measurements in the analysis layers, never inside predicates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence


class Side(Enum):
    """One side of an axis-aligned rectangle. Order W < N < E < S is fixed
    so that serializations are deterministic."""

    W = 0
    N = 1
    E = 2
    S = 3

    def __lt__(self, other: "Side") -> bool:
        return self.value < other.value


def parse_rational(text) -> Fraction:
    """Parse a decimal string ("0.6"), a quotient string ("3/5") or a number
    into an exact Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        raise TypeError("refusing to parse a float; pass a string for exact input")
    return Fraction(str(text).strip())


def format_rational(q: Fraction) -> str:
    """Canonical string form: "p/q", or "p" when the denominator is 1."""
    return str(q)


@dataclass(frozen=True, order=True)
class Point:
    """A planar point with exact rational coordinates."""

    x: Fraction
    y: Fraction

    @staticmethod
    def of(x, y) -> "Point":
        return Point(parse_rational(x), parse_rational(y))

    def as_floats(self) -> tuple[float, float]:
        return (float(self.x), float(self.y))

    def transposed(self) -> "Point":
        return Point(self.y, self.x)


def euclidean(p: Point, q: Point) -> float:
    """Binary64 Euclidean distance (a measurement, not a predicate)."""
    return math.hypot(float(p.x - q.x), float(p.y - q.y))


@dataclass(frozen=True)
class AspectRatio:
    """Aspect ratio of the construction rectangle.

    `hw` is the input rectangle's height/width ratio (any positive rational).
    Internally the canonical form keeps the long side vertical: `A >= 1`,
    with `transposed` recording that input coordinates must be swapped to
    reach that frame.
    """

    hw: Fraction

    def __post_init__(self):
        if self.hw <= 0:
            raise ValueError("aspect ratio must be positive")

    @staticmethod
    def parse(text) -> "AspectRatio":
        return AspectRatio(parse_rational(text))

    @property
    def A(self) -> Fraction:
        return self.hw if self.hw >= 1 else 1 / self.hw

    @property
    def transposed(self) -> bool:
        return self.hw < 1

    def __str__(self) -> str:
        return format_rational(self.hw)


@dataclass(frozen=True)
class Homothet:
    """An axis-aligned scaled translate of the construction rectangle.

    `anchor` is the lower-left corner, `scale` the width; the height is
    `aspect * scale` where `aspect` is the rectangle's height/width ratio.
    """

    anchor: Point
    scale: Fraction
    aspect: Fraction

    def __post_init__(self):
        if self.scale <= 0:
            raise ValueError("homothet scale must be positive")
        if self.aspect <= 0:
            raise ValueError("homothet aspect must be positive")

    @property
    def x_min(self) -> Fraction:
        return self.anchor.x

    @property
    def x_max(self) -> Fraction:
        return self.anchor.x + self.scale

    @property
    def y_min(self) -> Fraction:
        return self.anchor.y

    @property
    def y_max(self) -> Fraction:
        return self.anchor.y + self.aspect * self.scale

    @property
    def width(self) -> Fraction:
        return self.scale

    @property
    def height(self) -> Fraction:
        return self.aspect * self.scale

    @property
    def perimeter(self) -> Fraction:
        return 2 * (self.width + self.height)

    def transposed(self) -> "Homothet":
        return Homothet(self.anchor.transposed(), self.height, 1 / self.aspect)


class PointSet:
    """An ordered sequence of points; ids are the dense indices 0..n-1."""

    def __init__(self, points: Iterable[Point]):
        self.points: tuple[Point, ...] = tuple(points)

    @staticmethod
    def of(pairs: Sequence) -> "PointSet":
        return PointSet(Point.of(x, y) for x, y in pairs)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other) -> bool:
        return isinstance(other, PointSet) and self.points == other.points

    def transposed(self) -> "PointSet":
        return PointSet(p.transposed() for p in self.points)


@dataclass
class ValidationReport:
    """Every general-position violation in a point set, or ok."""

    shared_x: list = field(default_factory=list)
    shared_y: list = field(default_factory=list)
    collinear: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.shared_x or self.shared_y or self.collinear)

    def describe(self) -> str:
        if self.ok:
            return "ok"
        parts = []
        for i, j in self.shared_x:
            parts.append(f"shared x at indices ({i},{j})")
        for i, j in self.shared_y:
            parts.append(f"shared y at indices ({i},{j})")
        for i, j, k in self.collinear:
            parts.append(f"collinear triple ({i},{j},{k})")
        return "; ".join(parts)


def orientation(a: Point, b: Point, c: Point) -> int:
    """Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right, 0 collinear."""
    d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    return (d > 0) - (d < 0)


def validate_general_position(ps: PointSet) -> ValidationReport:
    """Check pairwise-distinct x, pairwise-distinct y, and no collinear triple.

    Collinear triples are rejected even though only distinct coordinates are
    needed for planarity: segments between vertices must pass through
    triangle interiors for the path-extraction machinery.
    """
    if len(ps) == 0:
        raise ValueError("empty point set")
    report = ValidationReport()
    by_x: dict = {}
    by_y: dict = {}
    for i, p in enumerate(ps):
        if p.x in by_x:
            report.shared_x.append((by_x[p.x], i))
        else:
            by_x[p.x] = i
        if p.y in by_y:
            report.shared_y.append((by_y[p.y], i))
        else:
            by_y[p.y] = i
    kern, (xs, ys) = _integer_view(ps)
    report.collinear = [tuple(t) for t in kern.collinear_triples(xs, ys)]
    return report


def _integer_view(ps: PointSet):
    """Clear denominators to integer coordinates and pick a kernel for them."""
    from .kernels import active_kernel

    den = 1
    for p in ps:
        den = den * p.x.denominator // math.gcd(den, p.x.denominator)
        den = den * p.y.denominator // math.gcd(den, p.y.denominator)
    xs = [int(p.x * den) for p in ps]
    ys = [int(p.y * den) for p in ps]
    return active_kernel(xs, ys), (xs, ys)


def smallest_homothet_scale(u: Point, v: Point, aspect: AspectRatio) -> Fraction:
    """Width of the smallest scaled translate of the construction rectangle
    with both points on its boundary: max(|dx|, |dy| / (height/width))."""
    if u == v:
        raise ValueError("degenerate pair")
    adx = abs(u.x - v.x)
    ady = abs(u.y - v.y)
    return max(adx, ady / aspect.hw)


def locate_point(p: Point, h: Homothet) -> tuple[str, Optional[Side]]:
    """Exactly classify a point against a homothet: ("inside", None),
    ("on", side) or ("outside", None). Corner contact reports the vertical
    (W/E) side."""
    if not (h.x_min <= p.x <= h.x_max and h.y_min <= p.y <= h.y_max):
        return ("outside", None)
    if h.x_min < p.x < h.x_max and h.y_min < p.y < h.y_max:
        return ("inside", None)
    if p.x == h.x_min:
        return ("on", Side.W)
    if p.x == h.x_max:
        return ("on", Side.E)
    if p.y == h.y_max:
        return ("on", Side.N)
    return ("on", Side.S)


def classify_edge(p: Point, q: Point, h: Homothet) -> tuple[Side, Side]:
    """Sides of the homothet boundary carrying each endpoint of an edge,
    p's side first."""
    kp, sp = locate_point(p, h)
    kq, sq = locate_point(q, h)
    if kp != "on" or kq != "on":
        raise ValueError("not incident")
    return (sp, sq)


def slope_class(p: Point, q: Point, L: Fraction) -> str:
    """"gentle" when the slope lies in the closed interval [-L, L], else
    "steep". Vertical edges are excluded by general position."""
    if p.x == q.x:
        raise ValueError("vertical edge violates general position")
    return "gentle" if abs(q.y - p.y) <= L * abs(q.x - p.x) else "steep"


def _cw_param(x_min: Fraction, y_min: Fraction, w: Fraction, hgt: Fraction,
              px: Fraction, py: Fraction) -> Fraction:
    """Clockwise arc length from the NW corner to a boundary point, walking
    N (west->east), E (north->south), S (east->west), W (south->north)."""
    x_max = x_min + w
    y_max = y_min + hgt
    if py == y_max and x_min <= px <= x_max:
        return px - x_min
    if px == x_max:
        return w + (y_max - py)
    if py == y_min:
        return w + hgt + (x_max - px)
    if px == x_min:
        return 2 * w + hgt + (py - y_min)
    raise ValueError("point not on boundary")


def rect_cw_distance(x_min: Fraction, y_min: Fraction, w: Fraction, hgt: Fraction,
                     a: tuple[Fraction, Fraction], b: tuple[Fraction, Fraction]) -> Fraction:
    pa = _cw_param(x_min, y_min, w, hgt, a[0], a[1])
    pb = _cw_param(x_min, y_min, w, hgt, b[0], b[1])
    return (pb - pa) % (2 * (w + hgt))


def perimeter_distance_clockwise(h: Homothet, from_pt: Point, to_pt: Point) -> Fraction:
    """Arc length walking clockwise along the homothet boundary from one
    boundary point to another; 0 when they coincide, never the full
    perimeter."""
    return rect_cw_distance(h.x_min, h.y_min, h.width, h.height,
                            (from_pt.x, from_pt.y), (to_pt.x, to_pt.y))
