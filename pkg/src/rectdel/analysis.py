"""Spanning-ratio measurement and the tight bound formulas.

Shortest paths are binary64 measurements over the exact graph structure;
all bound checks use an absolute tolerance of 1e-9.
"""

from __future__ import annotations

import csv
import heapq
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np

from .delaunay import Triangulation
from .errors import DisconnectedGraphError, RectDelError
from .geometry import AspectRatio, Point, euclidean

EPS = 1e-9


class BoundViolation(RectDelError):
    """A measured quantity exceeded a proven bound: an implementation bug."""

    def __init__(self, pair, detail):
        self.pair = pair
        super().__init__(f"bound violated for pair {pair}: {detail}")


def bound_formula(aspect) -> float:
    """Tight spanning-ratio bound sqrt(2) * sqrt(1 + A^2 + A*sqrt(A^2 + 1))
    for canonical aspect A >= 1, evaluated in extended precision."""
    if isinstance(aspect, AspectRatio):
        a = aspect.A
    else:
        a = Fraction(aspect)
        if a < 1:
            raise ValueError("aspect must be canonicalized to A >= 1")
    with mpmath.workdps(50):
        am = mpmath.mpf(a.numerator) / mpmath.mpf(a.denominator)
        val = mpmath.sqrt(2) * mpmath.sqrt(1 + am * am + am * mpmath.sqrt(am * am + 1))
        return float(val)


def directional_bound(u: Point, v: Point, aspect: AspectRatio) -> tuple[str, float]:
    """The per-pair path-length bound and which display applies.

    In the canonical orientation with x = |dx|, y = |dy|: "first" means
    A*x >= y with bound (A + sqrt(A^2+1))*x + y, "second" means A*x < y
    with bound A*x + (1 + sqrt(1/A^2 + 1))*y.
    """
    if u == v:
        raise ValueError("degenerate pair")
    adx = abs(u.x - v.x)
    ady = abs(u.y - v.y)
    if aspect.transposed:
        adx, ady = ady, adx
    A = aspect.A
    x = float(adx)
    y = float(ady)
    a = float(A)
    if A * adx >= ady:
        return "first", (a + math.sqrt(a * a + 1)) * x + y
    return "second", a * x + (1 + math.sqrt(1 / (a * a) + 1)) * y


def _pure_dijkstra(n, adj_w, source):
    dist = [math.inf] * n
    dist[source] = 0.0
    pred = [-9999] * n
    heap = [(0.0, source)]
    while heap:
        d, p = heapq.heappop(heap)
        if d > dist[p]:
            continue
        for q, w in adj_w[p]:
            nd = d + w
            if nd < dist[q]:
                dist[q] = nd
                pred[q] = p
                heapq.heappush(heap, (nd, q))
    return dist, pred


def shortest_path_lengths(T: Triangulation):
    """All-pairs shortest-path table (binary64) plus predecessors.

    Raises DisconnectedGraphError when the graph is disconnected, which
    would signal a construction bug. The table is symmetrized exactly.
    """
    n = len(T)
    adj_w = [[] for _ in range(n)]
    for i, j in T.edges:
        w = T.edge_length(i, j)
        adj_w[i].append((j, w))
        adj_w[j].append((i, w))
    if n <= 24 or not T.edges:
        dist = np.empty((n, n))
        pred = np.empty((n, n), dtype=np.int64)
        for s in range(n):
            d, p = _pure_dijkstra(n, adj_w, s)
            dist[s, :] = d
            pred[s, :] = p
    else:
        from scipy.sparse import csr_matrix
        from scipy.sparse.csgraph import dijkstra

        rows, cols, data = [], [], []
        for i, j in T.edges:
            rows.append(i)
            cols.append(j)
            data.append(T.edge_length(i, j))
        graph = csr_matrix((data, (rows, cols)), shape=(n, n))
        dist, pred = dijkstra(graph, directed=False, return_predecessors=True)
    if np.isinf(dist).any():
        raise DisconnectedGraphError("shortest-path table has unreachable pairs")
    dist = np.minimum(dist, dist.T)
    return dist, pred


def path_between(pred, u: int, v: int) -> list[int]:
    """Reconstruct the shortest path u..v from a predecessor matrix."""
    if u == v:
        return [u]
    out = [v]
    cur = v
    while cur != u:
        cur = int(pred[u][cur])
        if cur < 0:
            raise DisconnectedGraphError(f"no path between {u} and {v}")
        out.append(cur)
    out.reverse()
    return out


@dataclass
class PairStretch:
    u: int
    v: int
    d_t: float
    d_2: float
    ratio: float
    flag: str
    bound: float
    bound_slack: float


@dataclass
class StretchReport:
    """Per-pair stretch records with the tight bound for the aspect."""

    aspect: str
    n: int
    sigma: float
    max_ratio: float
    witness: tuple[int, int]
    records: list = field(default_factory=list)

    def to_json(self) -> str:
        doc = {
            "aspect": self.aspect,
            "n": self.n,
            "sigma": self.sigma,
            "max_ratio": self.max_ratio,
            "witness_pair": list(self.witness),
            "pairs": [vars(r) for r in self.records],
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["u", "v", "d_t", "d_2", "ratio", "flag", "bound", "bound_slack"])
        for r in self.records:
            w.writerow([r.u, r.v, repr(r.d_t), repr(r.d_2), repr(r.ratio),
                        r.flag, repr(r.bound), repr(r.bound_slack)])
        return buf.getvalue()


def all_pairs_stretch(T: Triangulation, check: bool = True, tol: float = EPS) -> StretchReport:
    """Measure every pair's stretch; optionally enforce the proven bounds."""
    n = len(T)
    dist, _pred = shortest_path_lengths(T)
    sigma = bound_formula(T.aspect)
    records = []
    max_ratio = 1.0
    witness = (0, min(1, n - 1))
    for u in range(n):
        pu = T.point_set[u]
        for v in range(u + 1, n):
            pv = T.point_set[v]
            d2 = euclidean(pu, pv)
            dt = float(dist[u, v])
            ratio = dt / d2
            flag, bound = directional_bound(pu, pv, T.aspect)
            slack = bound - dt
            records.append(PairStretch(u, v, dt, d2, ratio, flag, bound, slack))
            if ratio > max_ratio:
                max_ratio = ratio
                witness = (u, v)
            if check:
                if ratio > sigma + tol:
                    raise BoundViolation((u, v), f"ratio {ratio} > sigma {sigma}")
                if dt > bound + tol:
                    raise BoundViolation((u, v), f"d_t {dt} > directional bound {bound}")
    return StretchReport(str(T.aspect), n, sigma, max_ratio, witness, records)


def max_stretch(T: Triangulation) -> float:
    """Maximum d_t/d_2 over all pairs (no bound enforcement)."""
    n = len(T)
    dist, _ = shortest_path_lengths(T)
    best = 1.0
    for u in range(n):
        pu = T.point_set[u]
        for v in range(u + 1, n):
            r = float(dist[u, v]) / euclidean(pu, T.point_set[v])
            if r > best:
                best = r
    return best


def metric_violations(dist, tol: float = EPS) -> list:
    """Symmetry and triangle-inequality defects of a distance table."""
    n = dist.shape[0]
    bad = []
    if not np.array_equal(dist, dist.T):
        bad.append(("asymmetry",))
    for k in range(n):
        via = dist[:, k, None] + dist[None, k, :]
        mask = dist > via + tol
        if mask.any():
            i, j = np.argwhere(mask)[0]
            bad.append(("triangle", int(i), int(j), int(k)))
            break
    return bad
