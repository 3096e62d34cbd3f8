"""Independent construction oracle: triangles by triple enumeration.

Decides every triple by solving all side assignments for a circumscribing
homothet and checking emptiness literally, point by point; decides every
pair by enumerating candidate witness homothets and checking each one
literally. No decision logic is shared with the primary builder, so
equality of the two outputs is a meaningful test.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations, permutations

from .errors import DegenerateInputError, GeneralPositionError
from .geometry import AspectRatio, Homothet, Point, PointSet, validate_general_position
from .delaunay import Triangulation


def _own_square_ints(ps: PointSet, aspect: AspectRatio):
    """Scale input-orientation points so homothets become integer squares:
    x * den * hn, y * den * hd for aspect hn/hd."""
    den = 1
    for p in ps:
        den = den * p.x.denominator // math.gcd(den, p.x.denominator)
        den = den * p.y.denominator // math.gcd(den, p.y.denominator)
    hn, hd = aspect.hw.numerator, aspect.hw.denominator
    xs = [int(p.x * den) * hn for p in ps]
    ys = [int(p.y * den) * hd for p in ps]
    return xs, ys, den, hn, hd


def _back_to_homothet(ax, ay, s, den, hn, hd, aspect: AspectRatio) -> Homothet:
    return Homothet(
        Point(Fraction(ax, den * hn), Fraction(ay, den * hd)),
        Fraction(s, den * hn),
        aspect.hw,
    )


def _square_contains_strictly(xs, ys, k, ax, ay, s) -> bool:
    return ax < xs[k] < ax + s and ay < ys[k] < ay + s


def _square_boundary_ids(xs, ys, ax, ay, s):
    out = []
    for k in range(len(xs)):
        x, y = xs[k], ys[k]
        if ax <= x <= ax + s and ay <= y <= ay + s:
            if x == ax or x == ax + s or y == ay or y == ay + s:
                out.append(k)
    return out


def _empty_square(xs, ys, ax, ay, s, skip=()) -> bool:
    for k in range(len(xs)):
        if k in skip:
            continue
        if _square_contains_strictly(xs, ys, k, ax, ay, s):
            return False
    return True


def _candidate_squares_for_pair(xs, ys, i, j):
    """Candidate witness squares with points i and j on the boundary.

    Enumerates the sliding family at the minimal side length (candidate
    offsets: the interval ends plus every other point's horizontal line)
    and the two corner-pinned growing families (candidate sides: the
    minimal side plus every other point's blocking threshold).
    """
    n = len(xs)
    x0, x1 = min(xs[i], xs[j]), max(xs[i], xs[j])
    y0, y1 = min(ys[i], ys[j]), max(ys[i], ys[j])
    w = x1 - x0
    h = y1 - y0
    cands = set()
    if w >= h:
        s = w
        lo, hi = y1 - s, y0
        ts = {lo, hi}
        for k in range(n):
            if k != i and k != j and lo <= ys[k] <= hi:
                ts.add(ys[k])
        for t in ts:
            cands.add((x0, t, s))
    if h >= w:
        s = h
        lo, hi = x1 - s, x0
        ts = {lo, hi}
        for k in range(n):
            if k != i and k != j and lo <= xs[k] <= hi:
                ts.add(xs[k])
        for t in ts:
            cands.add((t, y0, s))
    smin = max(w, h)
    # the four corner-pinned growing families; invalid combinations are
    # discarded later by the literal boundary checks
    grow = {smin}
    for k in range(n):
        if k != i and k != j:
            grow.add(max(xs[k] - x0, ys[k] - y0))
            grow.add(max(xs[k] - x0, y1 - ys[k]))
            grow.add(max(x1 - xs[k], ys[k] - y0))
            grow.add(max(x1 - xs[k], y1 - ys[k]))
    for s in grow:
        if s >= smin:
            cands.add((x0, y0, s))
            cands.add((x0, y1 - s, s))
            cands.add((x1 - s, y0, s))
            cands.add((x1 - s, y1 - s, s))
    return sorted(cands)


def _on_square_boundary(xs, ys, k, ax, ay, s) -> bool:
    x, y = xs[k], ys[k]
    if not (ax <= x <= ax + s and ay <= y <= ay + s):
        return False
    return x == ax or x == ax + s or y == ay or y == ay + s


def oracle_has_edge(xs, ys, i, j):
    """(found, square) by literal candidate checking."""
    for ax, ay, s in _candidate_squares_for_pair(xs, ys, i, j):
        if not _on_square_boundary(xs, ys, i, ax, ay, s):
            continue
        if not _on_square_boundary(xs, ys, j, ax, ay, s):
            continue
        if _empty_square(xs, ys, ax, ay, s):
            return True, (ax, ay, s)
    return False, None


_SIDES3 = list(permutations("WNES", 3))


def _squares_through_triple(xs, ys, tri):
    """All squares with the three points on the boundary."""
    pts = [(xs[t], ys[t]) for t in tri]
    found = set()
    for sides in _SIDES3:
        assign = dict(zip(sides, pts))
        if "W" in assign and "E" in assign:
            s = assign["E"][0] - assign["W"][0]
            if s <= 0:
                continue
            ax = assign["W"][0]
            if "S" in assign:
                ay = assign["S"][1]
            else:
                ay = assign["N"][1] - s
        else:
            s = assign["N"][1] - assign["S"][1]
            if s <= 0:
                continue
            ay = assign["S"][1]
            if "W" in assign:
                ax = assign["W"][0]
            else:
                ax = assign["E"][0] - s
        ok = True
        for side, (px, py) in assign.items():
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
            found.add((ax, ay, s))
    return sorted(found)


def circumhomothets_by_oracle(ps: PointSet, aspect: AspectRatio, u: int, v: int, w: int):
    """Oracle-side circumhomothet enumeration for one triple."""
    xs, ys, den, hn, hd = _own_square_ints(ps, aspect)
    return [_back_to_homothet(ax, ay, s, den, hn, hd, aspect)
            for ax, ay, s in _squares_through_triple(xs, ys, (u, v, w))]


def build_by_triples(ps: PointSet, aspect: AspectRatio) -> Triangulation:
    """Construct the triangulation from empty circumhomothets of triples,
    plus literal pair witnesses for edges not covered by any triangle."""
    if len(ps) < 2:
        raise ValueError("need at least two points")
    report = validate_general_position(ps)
    if not report.ok:
        raise GeneralPositionError(report)
    xs, ys, den, hn, hd = _own_square_ints(ps, aspect)
    n = len(ps)

    triangles = []
    circum = {}
    for tri in combinations(range(n), 3):
        best = None
        for ax, ay, s in _squares_through_triple(xs, ys, tri):
            if _empty_square(xs, ys, ax, ay, s):
                boundary = _square_boundary_ids(xs, ys, ax, ay, s)
                if len(boundary) > 3:
                    raise DegenerateInputError(
                        "degenerate input: four points on one homothet boundary "
                        f"(ids {sorted(boundary)})")
                best = (ax, ay, s)
                break
        if best is not None:
            triangles.append(tri)
            circum[tri] = _back_to_homothet(*best, den, hn, hd, aspect)

    edges = set()
    for tri in triangles:
        a, b, c = tri
        edges.update([(a, b), (a, c), (b, c)])
    witnesses = {}
    for i, j in combinations(range(n), 2):
        if (i, j) in edges:
            continue
        found, sq = oracle_has_edge(xs, ys, i, j)
        if found:
            boundary = _square_boundary_ids(xs, ys, *sq)
            if len(boundary) > 3:
                raise DegenerateInputError(
                    "degenerate input: four points on one homothet boundary "
                    f"(ids {sorted(boundary)})")
            edges.add((i, j))
            witnesses[(i, j)] = _back_to_homothet(*sq, den, hn, hd, aspect)

    return Triangulation(ps, aspect, sorted(edges), triangles, circum, witnesses)
