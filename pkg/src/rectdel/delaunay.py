"""Rectangle Delaunay triangulation by the empty-homothet edge predicate.

An edge (u, v) exists when some scaled translate of the construction
rectangle has u and v on its boundary and no other point strictly inside.
Construction scales all coordinates to integers, maps homothets to squares
(x stretched by the aspect numerator, y by the denominator), and runs the
exact slide-interval decision from the kernel module on every pair.
Triangles are the interior faces of the resulting plane graph, each matched
to a verified empty circumhomothet.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Optional

from .errors import DegenerateInputError, GeneralPositionError
from .geometry import (
    AspectRatio,
    Homothet,
    Point,
    PointSet,
    format_rational,
    parse_rational,
    validate_general_position,
)
from .kernels import active_kernel


@dataclass(frozen=True)
class EmptyBox:
    """Axis-aligned box with a point pair in opposite corners."""

    x_min: Fraction
    x_max: Fraction
    y_min: Fraction
    y_max: Fraction

    @staticmethod
    def of_pair(u: Point, v: Point) -> "EmptyBox":
        if u == v:
            raise ValueError("degenerate pair")
        return EmptyBox(min(u.x, v.x), max(u.x, v.x), min(u.y, v.y), max(u.y, v.y))

    def contains_strictly(self, p: Point) -> bool:
        return self.x_min < p.x < self.x_max and self.y_min < p.y < self.y_max


class Triangulation:
    """Vertices, edges, triangles and circumscribing homothets.

    Immutable after construction; exposes the input-orientation geometry plus
    integer-scaled caches in the canonical (long-side-vertical) orientation
    for exact downstream predicates.
    """

    def __init__(self, point_set: PointSet, aspect: AspectRatio, edges, triangles,
                 circumhomothets, edge_witnesses):
        self.point_set = point_set
        self.aspect = aspect
        self.edges = sorted(tuple(sorted(e)) for e in edges)
        self.edge_set = set(self.edges)
        self.triangles = sorted(tuple(sorted(t)) for t in triangles)
        self.circumhomothets = dict(circumhomothets)
        self.edge_witnesses = dict(edge_witnesses)
        self.adjacency = {i: [] for i in range(len(point_set))}
        for i, j in self.edges:
            self.adjacency[i].append(j)
            self.adjacency[j].append(i)
        for lst in self.adjacency.values():
            lst.sort()
        self._init_caches()

    def _init_caches(self):
        self.work_points = (self.point_set.transposed() if self.aspect.transposed
                            else self.point_set)
        den = 1
        for p in self.work_points:
            den = den * p.x.denominator // math.gcd(den, p.x.denominator)
            den = den * p.y.denominator // math.gcd(den, p.y.denominator)
        self.int_den = den
        self.ix = [int(p.x * den) for p in self.work_points]
        self.iy = [int(p.y * den) for p in self.work_points]
        a = self.aspect.A
        self.A_num, self.A_den = a.numerator, a.denominator
        self.sq_x = [v * self.A_num for v in self.ix]
        self.sq_y = [v * self.A_den for v in self.iy]

    def __len__(self):
        return len(self.point_set)

    def has_edge(self, u: int, v: int) -> bool:
        return tuple(sorted((u, v))) in self.edge_set

    def edge_length(self, u: int, v: int) -> float:
        pu, pv = self.point_set[u], self.point_set[v]
        return math.hypot(float(pu.x - pv.x), float(pu.y - pv.y))

    def work_homothet(self, tri) -> Homothet:
        """Circumhomothet of a triangle in the canonical work orientation."""
        h = self.circumhomothets[tuple(sorted(tri))]
        return h.transposed() if self.aspect.transposed else h

    def to_json(self) -> str:
        doc = {
            "aspect": str(self.aspect),
            "points": [{"x": format_rational(p.x), "y": format_rational(p.y)}
                       for p in self.point_set],
            "edges": [list(e) for e in self.edges],
            "triangles": [list(t) for t in self.triangles],
            "circumhomothets": {
                ",".join(map(str, t)): {
                    "anchor": [format_rational(h.anchor.x), format_rational(h.anchor.y)],
                    "scale": format_rational(h.scale),
                }
                for t, h in sorted(self.circumhomothets.items())
            },
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"

    @staticmethod
    def from_json(text: str) -> "Triangulation":
        doc = json.loads(text)
        aspect = AspectRatio.parse(doc["aspect"])
        ps = PointSet(Point.of(rec["x"], rec["y"]) for rec in doc["points"])
        edges = [tuple(e) for e in doc["edges"]]
        triangles = [tuple(t) for t in doc["triangles"]]
        hw = aspect.hw
        circum = {}
        for key, rec in doc["circumhomothets"].items():
            tri = tuple(int(s) for s in key.split(","))
            circum[tri] = Homothet(
                Point.of(rec["anchor"][0], rec["anchor"][1]),
                parse_rational(rec["scale"]),
                hw,
            )
        return Triangulation(ps, aspect, edges, triangles, circum, {})


def _square_ints(ps: PointSet, aspect: AspectRatio):
    """Integer square coordinates of the work-orientation points."""
    work = ps.transposed() if aspect.transposed else ps
    den = 1
    for p in work:
        den = den * p.x.denominator // math.gcd(den, p.x.denominator)
        den = den * p.y.denominator // math.gcd(den, p.y.denominator)
    a = aspect.A
    sqx = [int(p.x * den) * a.numerator for p in work]
    sqy = [int(p.y * den) * a.denominator for p in work]
    return sqx, sqy, den


def _square_to_homothet(anchor_x: int, anchor_y: int, side: int, den: int,
                        aspect: AspectRatio) -> Homothet:
    """Map an integer square back to an input-orientation homothet."""
    a = aspect.A
    hom = Homothet(
        Point(Fraction(anchor_x, den * a.numerator), Fraction(anchor_y, den * a.denominator)),
        Fraction(side, den * a.numerator),
        a,
    )
    return hom.transposed() if aspect.transposed else hom


def _require_valid(ps: PointSet):
    report = validate_general_position(ps)
    if not report.ok:
        raise GeneralPositionError(report)


def has_edge(ps: PointSet, aspect: AspectRatio, u: int, v: int,
             validate: bool = True) -> tuple[bool, Optional[Homothet]]:
    """Empty-homothet edge predicate for one pair, with a witness when true."""
    n = len(ps)
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError("invalid ids")
    if u == v:
        raise ValueError("degenerate pair")
    if validate:
        _require_valid(ps)
    sqx, sqy, den = _square_ints(ps, aspect)
    kern = active_kernel(sqx, sqy)
    wit = kern.edge_witness(sqx, sqy, u, v)
    if wit is None:
        return False, None
    ax, ay, s = wit
    _check_witness_degeneracy(kern, sqx, sqy, ax, ay, s)
    return True, _square_to_homothet(ax, ay, s, den, aspect)


def _check_witness_degeneracy(kern, sqx, sqy, ax, ay, s):
    inside, boundary = kern.classify_against_square(sqx, sqy, ax, ay, s)
    if inside:
        raise AssertionError(f"witness homothet not empty: ids {inside}")
    if len(boundary) > 3:
        raise DegenerateInputError(
            f"degenerate input: four points on one homothet boundary (ids {sorted(boundary)})")
    return boundary


def _ccw_sorted(neighbors, ix, iy, p):
    """Neighbor ids of p sorted counterclockwise by direction from p."""
    import functools

    px, py = ix[p], iy[p]

    def half(q):
        dx, dy = ix[q] - px, iy[q] - py
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def cmp(q1, q2):
        h1, h2 = half(q1), half(q2)
        if h1 != h2:
            return -1 if h1 < h2 else 1
        dx1, dy1 = ix[q1] - px, iy[q1] - py
        dx2, dy2 = ix[q2] - px, iy[q2] - py
        cr = dx1 * dy2 - dy1 * dx2
        if cr > 0:
            return -1
        if cr < 0:
            return 1
        return 0

    return sorted(neighbors, key=functools.cmp_to_key(cmp))


def trace_faces(ix, iy, adjacency):
    """Faces of the plane straight-line graph as vertex cycles.

    Returns (interior, outer): interior cycles are counterclockwise with
    strictly positive doubled area; everything else (the outer walks,
    including tree-like zero-area walks) lands in outer.
    """
    rotation = {}
    position = {}
    for p, nbrs in adjacency.items():
        if not nbrs:
            continue
        order = _ccw_sorted(nbrs, ix, iy, p)
        rotation[p] = order
        for idx, q in enumerate(order):
            position[(p, q)] = idx

    visited = set()
    interior = []
    outer = []
    for p, nbrs in rotation.items():
        for q in nbrs:
            if (p, q) in visited:
                continue
            cycle = []
            a, b = p, q
            while (a, b) not in visited:
                visited.add((a, b))
                cycle.append(a)
                order = rotation[b]
                idx = position[(b, a)]
                c = order[(idx - 1) % len(order)]
                a, b = b, c
            area2 = 0
            for k in range(len(cycle)):
                x1, y1 = ix[cycle[k]], iy[cycle[k]]
                x2, y2 = ix[cycle[(k + 1) % len(cycle)]], iy[cycle[(k + 1) % len(cycle)]]
                area2 += x1 * y2 - x2 * y1
            if area2 > 0:
                interior.append(cycle)
            else:
                outer.append(cycle)
    return interior, outer


_SIDE_TRIPLES = [t for t in permutations("WNES", 3)]


def _square_candidates(sqx, sqy, tri):
    """All squares with the triple on the boundary, by side assignment.

    Each point is assigned one side of the square; two points can never share
    a side in general position, so only injective assignments are solved.
    """
    out = set()
    pts = [(sqx[t], sqy[t]) for t in tri]
    for sides in _SIDE_TRIPLES:
        which = dict(zip(sides, pts))
        if "W" in which and "E" in which:
            s = which["E"][0] - which["W"][0]
            if s <= 0:
                continue
            ax = which["W"][0]
            ay = which["S"][1] if "S" in which else which["N"][1] - s
        else:  # both N and S present
            s = which["N"][1] - which["S"][1]
            if s <= 0:
                continue
            ay = which["S"][1]
            ax = which["W"][0] if "W" in which else which["E"][0] - s
        ok = True
        for side, (px, py) in which.items():
            if side == "W":
                ok = px == ax and ay <= py <= ay + s
            elif side == "E":
                ok = px == ax + s and ay <= py <= ay + s
            elif side == "S":
                ok = py == ay and ax <= px <= ax + s
            else:
                ok = py == ay + s and ax <= px <= ax + s
            if not ok:
                break
        if ok:
            out.add((ax, ay, s))
    return sorted(out, key=lambda c: (c[2], c[0], c[1]))


def circumhomothets_of_triple(ps: PointSet, aspect: AspectRatio, u: int, v: int, w: int,
                              validate: bool = True) -> list[Homothet]:
    """All homothets with the three points on the boundary (possibly none)."""
    if len({u, v, w}) != 3:
        raise ValueError("triple must consist of three distinct ids")
    if validate:
        _require_valid(ps)
    sqx, sqy, den = _square_ints(ps, aspect)
    return [_square_to_homothet(ax, ay, s, den, aspect)
            for ax, ay, s in _square_candidates(sqx, sqy, (u, v, w))]


def build_triangulation(ps: PointSet, aspect: AspectRatio) -> Triangulation:
    """Construct the rectangle Delaunay triangulation of a valid point set."""
    if len(ps) < 2:
        raise ValueError("need at least two points")
    _require_valid(ps)
    sqx, sqy, den = _square_ints(ps, aspect)
    kern = active_kernel(sqx, sqy)

    edges = []
    witnesses = {}
    for i, j, ax, ay, s in kern.all_edges(sqx, sqy):
        _check_witness_degeneracy(kern, sqx, sqy, ax, ay, s)
        edges.append((i, j))
        witnesses[(i, j)] = _square_to_homothet(ax, ay, s, den, aspect)

    adjacency = {i: [] for i in range(len(ps))}
    for i, j in edges:
        adjacency[i].append(j)
        adjacency[j].append(i)

    work = ps.transposed() if aspect.transposed else ps
    den_u = 1
    for p in work:
        den_u = den_u * p.x.denominator // math.gcd(den_u, p.x.denominator)
        den_u = den_u * p.y.denominator // math.gcd(den_u, p.y.denominator)
    ix = [int(p.x * den_u) for p in work]
    iy = [int(p.y * den_u) for p in work]

    triangles = []
    circum = {}
    if len(ps) >= 3 and edges:
        interior, _outer = trace_faces(ix, iy, adjacency)
        for cycle in interior:
            if len(cycle) != 3:
                raise DegenerateInputError(
                    f"degenerate input: non-triangular interior face {sorted(cycle)} "
                    "(four co-homothet points)")
            tri = tuple(sorted(cycle))
            cands = _square_candidates(sqx, sqy, tri)
            chosen = None
            for ax, ay, s in cands:
                inside, boundary = kern.classify_against_square(sqx, sqy, ax, ay, s)
                if inside:
                    continue
                if len(boundary) > 3:
                    raise DegenerateInputError(
                        "degenerate input: four points on one homothet boundary "
                        f"(ids {sorted(boundary)})")
                chosen = (ax, ay, s)
                break
            if chosen is None:
                raise AssertionError(
                    f"interior face {tri} has no empty circumhomothet; construction bug")
            triangles.append(tri)
            circum[tri] = _square_to_homothet(*chosen, den, aspect)

    return Triangulation(ps, aspect, edges, triangles, circum, witnesses)
