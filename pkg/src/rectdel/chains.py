"""Triangle chains crossing a segment, in a pair-specific exact frame.

For a vertex pair (u, v) the frame translates u to the origin, flips axes so
v lies up-right, and transposes coordinates when the pair is steep so that
the frame's vertical-to-horizontal rectangle ratio L satisfies L*X >= Y for
v at (X, Y). All frame coordinates are exact rationals; orientation tests
run on denominator-cleared integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .delaunay import Triangulation
from .geometry import Homothet, Point


@dataclass(frozen=True)
class Frame:
    transpose: bool
    sx: int
    sy: int
    origin: tuple[Fraction, Fraction]
    L: Fraction

    def map_point(self, p: Point) -> tuple[Fraction, Fraction]:
        x, y = (p.y, p.x) if self.transpose else (p.x, p.y)
        return (self.sx * (x - self.origin[0]), self.sy * (y - self.origin[1]))

    def map_rect(self, h: Homothet) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """Frame (x_min, y_min, x_max, y_max) of a work-orientation homothet."""
        xs = (h.x_min, h.x_max)
        ys = (h.y_min, h.y_max)
        if self.transpose:
            xs, ys = ys, xs
        fx = sorted(self.sx * (x - self.origin[0]) for x in xs)
        fy = sorted(self.sy * (y - self.origin[1]) for y in ys)
        return (fx[0], fy[0], fx[1], fy[1])


def make_frame(T: Triangulation, u: int, v: int) -> Frame:
    """Frame for the pair; transposed exactly when the pair is steep."""
    pu = T.work_points[u]
    pv = T.work_points[v]
    A = T.aspect.A
    gentle_pair = A * abs(pv.x - pu.x) >= abs(pv.y - pu.y)
    transpose = not gentle_pair
    L = A if gentle_pair else 1 / A
    ux, uy = (pu.y, pu.x) if transpose else (pu.x, pu.y)
    vx, vy = (pv.y, pv.x) if transpose else (pv.x, pv.y)
    sx = 1 if vx > ux else -1
    sy = 1 if vy > uy else -1
    return Frame(transpose, sx, sy, (ux, uy), L)


@dataclass
class ChainLink:
    """One chain triangle with its exit-segment labels and frame rectangle."""

    tri: tuple
    h: int
    l: int
    rect: tuple[Fraction, Fraction, Fraction, Fraction]

    @property
    def x_east(self) -> Fraction:
        return self.rect[2]


@dataclass
class TriangleChain:
    """Ordered triangles crossing the open segment from u to v.

    Links 1..k-1 carry the exit-segment labels (h above the segment line,
    l below); link k carries the sentinels h_k = v and l_k = l_{k-1}.
    """

    u: int
    v: int
    frame: Frame
    links: list

    @property
    def k(self) -> int:
        return len(self.links)

    def h(self, i: int) -> int:
        return self.u if i == 0 else self.links[i - 1].h

    def l(self, i: int) -> int:
        return self.u if i == 0 else self.links[i - 1].l

    def rect(self, i: int):
        return self.links[i - 1].rect

    def x_east(self, i: int) -> Fraction:
        return self.links[i - 1].x_east


def _chain_indexes(T: Triangulation):
    cached = getattr(T, "_chain_idx", None)
    if cached is not None:
        return cached
    by_vertex = {i: [] for i in range(len(T))}
    by_edge = {}
    for tri in T.triangles:
        for t in tri:
            by_vertex[t].append(tri)
        a, b, c = tri
        for e in ((a, b), (a, c), (b, c)):
            by_edge.setdefault(e, []).append(tri)
    T._chain_idx = (by_vertex, by_edge)
    return T._chain_idx


def build_chain(T: Triangulation, u: int, v: int) -> Optional[TriangleChain]:
    """Walk the triangles crossed by segment uv; None when no contiguous
    chain exists (no triangles at u, or the segment leaves the triangulated
    region)."""
    frame = make_frame(T, u, v)
    by_vertex, by_edge = _chain_indexes(T)

    base_x = T.iy if frame.transpose else T.ix
    base_y = T.ix if frame.transpose else T.iy
    ox, oy = base_x[u], base_y[u]
    sx, sy = frame.sx, frame.sy
    n = len(T)
    fx = [sx * (base_x[p] - ox) for p in range(n)]
    fy = [sy * (base_y[p] - oy) for p in range(n)]
    FX, FY = fx[v], fy[v]

    def side(p: int) -> int:
        d = FX * fy[p] - FY * fx[p]
        return (d > 0) - (d < 0)

    def orient(a: int, b: int, c: int) -> int:
        d = (fx[b] - fx[a]) * (fy[c] - fy[a]) - (fy[b] - fy[a]) * (fx[c] - fx[a])
        return (d > 0) - (d < 0)

    def crossing_edges(tri):
        out = []
        pts = list(tri)
        for idx in range(3):
            a, b = pts[idx], pts[(idx + 1) % 3]
            if a == u or b == u or a == v or b == v:
                continue
            if side(a) * side(b) < 0 and orient(a, b, u) * orient(a, b, v) < 0:
                out.append((a, b))
        return out

    start = None
    for tri in by_vertex[u]:
        if v in tri:
            return None  # adjacent pair; no chain
        cross = crossing_edges(tri)
        if len(cross) == 1:
            start = (tri, cross[0])
            break
    if start is None:
        return None

    links = []
    cur, exit_edge = start
    visited = set()
    while True:
        if cur in visited:
            return None
        visited.add(cur)
        if v in cur:
            if not links:
                return None
            rect = frame.map_rect(T.work_homothet(cur))
            links.append(ChainLink(cur, v, links[-1].l, rect))
            break
        a, b = exit_edge
        hpt, lpt = (a, b) if side(a) > 0 else (b, a)
        rect = frame.map_rect(T.work_homothet(cur))
        links.append(ChainLink(cur, hpt, lpt, rect))
        nxt = [t for t in by_edge.get(tuple(sorted(exit_edge)), []) if t != cur]
        if not nxt:
            return None  # the segment leaves the triangulated region
        cur = nxt[0]
        if v in cur:
            exit_edge = None
            continue
        cross = [e for e in crossing_edges(cur) if set(e) != set(exit_edge)]
        if len(cross) != 1:
            return None
        exit_edge = cross[0]
    return TriangleChain(u, v, frame, links)


def triangle_chain(T: Triangulation, u: int, v: int) -> Optional[TriangleChain]:
    """Chain for a non-adjacent pair; errors for adjacent pairs, None when
    no chain exists."""
    if T.has_edge(u, v):
        raise ValueError("adjacent pair has empty chain")
    return build_chain(T, u, v)


def chain_structure_violations(chain: TriangleChain, T: Triangulation) -> list:
    """Structural defects (for tests): consecutive links must share a label,
    labels must lie strictly above/below the segment line."""
    bad = []
    frame = chain.frame
    pu = frame.map_point(T.work_points[chain.u])
    pv = frame.map_point(T.work_points[chain.v])
    X, Y = pv

    def side_of(pid):
        px, py = frame.map_point(T.work_points[pid])
        d = X * py - Y * px
        return (d > 0) - (d < 0)

    for i in range(1, chain.k):
        if side_of(chain.h(i)) <= 0:
            bad.append(("h_below", i))
        if side_of(chain.l(i)) >= 0:
            bad.append(("l_above", i))
    for i in range(1, chain.k - 1):
        if chain.h(i) != chain.h(i + 1) and chain.l(i) != chain.l(i + 1):
            bad.append(("no_shared_label", i))
    return bad
