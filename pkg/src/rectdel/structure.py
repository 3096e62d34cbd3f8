"""Structural validity checks for built triangulations.

Planarity by exact segment-crossing tests, Euler-consistent face counts, and
emptiness of every stored circumhomothet. The classical count identities
triangles = 2n - 2 - h and edges = 3n - 3 - h (h = hull size) hold exactly
when the graph triangulates its convex hull; graphs here can legitimately
fail that (a box-interior point can block every witness of a hull pair), in
which case the identities are checked against the outer-face walk length
instead, which is the Euler-exact generalization.
"""

from __future__ import annotations

from dataclasses import dataclass

from .delaunay import Triangulation, trace_faces
from .errors import DisconnectedGraphError
from .kernels import active_kernel


def convex_hull_ids(ix, iy) -> list:
    """Andrew's monotone chain on exact integer coordinates."""
    order = sorted(range(len(ix)), key=lambda p: (ix[p], iy[p]))
    if len(order) <= 2:
        return order

    def cross(o, a, b):
        return (ix[a] - ix[o]) * (iy[b] - iy[o]) - (iy[a] - iy[o]) * (ix[b] - ix[o])

    lower = []
    for p in order:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(order):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def planarity_violations(T: Triangulation) -> list:
    """Pairs of edges that properly cross (must be empty)."""
    kern = active_kernel(T.ix, T.iy)
    crossings = kern.crossing_pairs(T.ix, T.iy, [list(e) for e in T.edges])
    return [(T.edges[a], T.edges[b]) for a, b in crossings]


@dataclass
class CountReport:
    n: int
    edges: int
    triangles: int
    hull_size: int
    boundary_len: int
    components: int
    hull_is_boundary: bool

    @property
    def hull_identity_ok(self) -> bool:
        return (self.triangles == 2 * self.n - 2 - self.hull_size
                and self.edges == 3 * self.n - 3 - self.hull_size)

    @property
    def euler_identity_ok(self) -> bool:
        return (self.triangles == 2 * self.n - 2 - self.boundary_len
                and self.edges == 3 * self.n - 3 - self.boundary_len)

    @property
    def ok(self) -> bool:
        return self.components == 1 and (
            self.hull_identity_ok if self.hull_is_boundary else self.euler_identity_ok)


def count_report(T: Triangulation) -> CountReport:
    n = len(T)
    hull = convex_hull_ids(T.ix, T.iy)
    interior, outer = trace_faces(T.ix, T.iy, T.adjacency)
    isolated = sum(1 for i in range(n) if not T.adjacency[i])
    components = len(outer) + isolated if n > 1 else 1
    boundary_len = sum(len(c) for c in outer)
    hull_edges = {tuple(sorted((hull[i], hull[(i + 1) % len(hull)])))
                  for i in range(len(hull))} if len(hull) >= 3 else set()
    hull_is_boundary = (
        len(outer) == 1
        and len(outer[0]) == len(hull)
        and hull_edges <= T.edge_set
    )
    return CountReport(n, len(T.edges), len(T.triangles), len(hull),
                       boundary_len, components, hull_is_boundary)


def circumhomothet_problems(T: Triangulation) -> list:
    """Defects of stored circumhomothets and edge witnesses: a vertex
    strictly inside, a triangle vertex off the boundary, or four points on
    one boundary."""
    problems = []
    kern = active_kernel(T.sq_x, T.sq_y)
    den = T.int_den

    def square_of(hom):
        work = hom.transposed() if T.aspect.transposed else hom
        ax = work.x_min * den * T.A_num
        ay = work.y_min * den * T.A_den
        s = work.width * den * T.A_num
        if ax.denominator != 1 or ay.denominator != 1 or s.denominator != 1:
            return None
        return int(ax), int(ay), int(s)

    def check(hom, members, label):
        sq = square_of(hom)
        if sq is None:
            problems.append((label, "homothet not representable on the point grid"))
            return
        inside, boundary = kern.classify_against_square(T.sq_x, T.sq_y, *sq)
        if inside:
            problems.append((label, f"vertices strictly inside: {inside}"))
        missing = [m for m in members if m not in boundary]
        if missing:
            problems.append((label, f"members off the boundary: {missing}"))
        if len(boundary) > 3:
            problems.append((label, f"four or more points on the boundary: {boundary}"))

    for tri, hom in T.circumhomothets.items():
        check(hom, list(tri), f"triangle {tri}")
    for pair, hom in T.edge_witnesses.items():
        check(hom, list(pair), f"edge {pair}")
    return problems


def verify_structure(T: Triangulation, require_connected: bool = True) -> dict:
    """Full structural audit; raises only for disconnection, reports the rest."""
    report = count_report(T)
    if require_connected and report.components != 1 and len(T) > 1:
        raise DisconnectedGraphError(f"{report.components} outer walks found")
    return {
        "counts": report,
        "crossings": planarity_violations(T),
        "homothet_problems": circumhomothet_problems(T),
    }
