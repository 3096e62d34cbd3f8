"""Independent certificate verification.

Re-derives every step's numbers from the triangulation alone: its own
shortest-path distances, its own pair frame, and the shared exact geometry
primitives. No extraction code is reused, so a verified certificate is
evidence about the triangulation, not about the extractor.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .delaunay import Triangulation
from .errors import CertificateError
from .geometry import Point, euclidean, rect_cw_distance, smallest_homothet_scale

EPS = 1e-9
RECOMPUTE_TOL = 1e-6


@dataclass
class VerifyResult:
    ok: bool
    failing_step: Optional[int]
    reason: Optional[str]

    def __bool__(self):
        return self.ok


class _Fail(Exception):
    pass


class VerifierContext:
    """Per-triangulation caches for batch verification."""

    def __init__(self, T: Triangulation):
        self.T = T
        self.dist = self._all_pairs(T)

    @staticmethod
    def _all_pairs(T: Triangulation):
        n = len(T)
        adj = [[] for _ in range(n)]
        for i, j in T.edges:
            w = T.edge_length(i, j)
            adj[i].append((j, w))
            adj[j].append((i, w))
        table = []
        for s in range(n):
            dist = [math.inf] * n
            dist[s] = 0.0
            heap = [(0.0, s)]
            while heap:
                d, p = heapq.heappop(heap)
                if d > dist[p]:
                    continue
                for q, w in adj[p]:
                    nd = d + w
                    if nd < dist[q]:
                        dist[q] = nd
                        heapq.heappush(heap, (nd, q))
            table.append(dist)
        for a in range(n):
            for b in range(n):
                if table[a][b] != table[b][a]:
                    m = min(table[a][b], table[b][a])
                    table[a][b] = m
                    table[b][a] = m
        return table


class _PairFrame:
    """Frame for one pair, mirroring the extraction-side convention:
    origin at u, v up-right, transposed when the pair is steep."""

    def __init__(self, T: Triangulation, u: int, v: int):
        pu, pv = T.work_points[u], T.work_points[v]
        A = T.aspect.A
        self.gentle = A * abs(pv.x - pu.x) >= abs(pv.y - pu.y)
        self.transpose = not self.gentle
        self.L = A if self.gentle else 1 / A
        ux, uy = (pu.y, pu.x) if self.transpose else (pu.x, pu.y)
        vx, vy = (pv.y, pv.x) if self.transpose else (pv.x, pv.y)
        self.sx = 1 if vx > ux else -1
        self.sy = 1 if vy > uy else -1
        self.origin = (ux, uy)
        self.T = T

    def pt(self, pid: int):
        p = self.T.work_points[pid]
        x, y = (p.y, p.x) if self.transpose else (p.x, p.y)
        return (self.sx * (x - self.origin[0]), self.sy * (y - self.origin[1]))

    def rect(self, tri):
        h = self.T.work_homothet(tuple(tri))
        xs = (h.x_min, h.x_max)
        ys = (h.y_min, h.y_max)
        if self.transpose:
            xs, ys = ys, xs
        fx = sorted(self.sx * (x - self.origin[0]) for x in xs)
        fy = sorted(self.sy * (y - self.origin[1]) for y in ys)
        return (fx[0], fy[0], fx[1], fy[1])


def _side_of(fp, rect) -> str:
    xmin, ymin, xmax, ymax = rect
    if not (xmin <= fp[0] <= xmax and ymin <= fp[1] <= ymax):
        return "off"
    if fp[0] == xmin:
        return "W"
    if fp[0] == xmax:
        return "E"
    if fp[1] == ymax:
        return "N"
    if fp[1] == ymin:
        return "S"
    return "interior"


def _display_bound(T: Triangulation, u: int, v: int) -> tuple[str, float]:
    pu, pv = T.work_points[u], T.work_points[v]
    A = T.aspect.A
    x = float(abs(pu.x - pv.x))
    y = float(abs(pu.y - pv.y))
    a = float(A)
    if A * abs(pu.x - pv.x) >= abs(pu.y - pv.y):
        return "first", (a + math.sqrt(a * a + 1)) * x + y
    return "second", a * x + (1 + math.sqrt(1 / (a * a) + 1)) * y


def _pair_box_interior(T: Triangulation, u: int, v: int):
    pu, pv = T.point_set[u], T.point_set[v]
    x0, x1 = min(pu.x, pv.x), max(pu.x, pv.x)
    y0, y1 = min(pu.y, pv.y), max(pu.y, pv.y)
    out = []
    for k in range(len(T)):
        p = T.point_set[k]
        if k not in (u, v) and x0 < p.x < x1 and y0 < p.y < y1:
            out.append(k)
    return out


def _require(cond, msg):
    if not cond:
        raise _Fail(msg)


def _potential_sides(frame, dist_u, h, l, tri):
    rect = frame.rect(tri)
    fh, fl = frame.pt(h), frame.pt(l)
    _require(_side_of(fh, rect) not in ("off", "interior"), "label not on rectangle boundary")
    _require(_side_of(fl, rect) not in ("off", "interior"), "label not on rectangle boundary")
    d_r = rect_cw_distance(rect[0], rect[1], rect[2] - rect[0], rect[3] - rect[1], fh, fl)
    lhs = dist_u[h] + dist_u[l] + float(d_r)
    rhs = float((2 + 2 * frame.L) * rect[2])
    return lhs, rhs, rect


def verify_certificate(T: Triangulation, cert, ctx: Optional[VerifierContext] = None,
                       tol: float = EPS) -> VerifyResult:
    """Re-check a certificate against the triangulation; returns the first
    failing step on rejection."""
    if ctx is None:
        ctx = VerifierContext(T)
    n = len(T)
    u, v = cert.u, cert.v
    try:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise _Fail("invalid pair")
        flag, bound = _display_bound(T, u, v)
        if cert.flag != flag:
            raise _Fail(f"direction flag mismatch: {cert.flag} != {flag}")
        if abs(cert.claimed_bound - bound) > RECOMPUTE_TOL:
            raise _Fail("claimed bound does not match the directional bound")
        path = cert.path
        if not path or path[0] != u or path[-1] != v:
            raise _Fail("path endpoints do not match the pair")
        length = 0.0
        for a, b in zip(path, path[1:]):
            if tuple(sorted((a, b))) not in T.edge_set:
                raise _Fail("path edge absent")
            length += T.edge_length(a, b)
        if length > bound + tol:
            raise _Fail(f"path length {length} exceeds the bound {bound}")
    except _Fail as f:
        return VerifyResult(False, None, str(f))

    for idx, step in enumerate(cert.steps):
        try:
            su = step.ids.get("u")
            sv = step.ids.get("v")
            _require(su is not None and sv is not None, "step lacks pair ids")
            lhs, rhs = _recompute_step(T, ctx, step)
            _require(abs(step.lhs - lhs) <= RECOMPUTE_TOL, f"lhs mismatch ({step.lhs} vs {lhs})")
            _require(abs(step.rhs - rhs) <= RECOMPUTE_TOL, f"rhs mismatch ({step.rhs} vs {rhs})")
            _require(abs(step.slack - (step.rhs - step.lhs)) <= RECOMPUTE_TOL, "slack mismatch")
            _require(rhs - lhs >= -tol, f"negative slack {rhs - lhs}")
        except _Fail as f:
            return VerifyResult(False, idx, f"step {idx} [{step.kind}]: {f}")
        except (KeyError, TypeError, IndexError, ValueError) as exc:
            return VerifyResult(False, idx, f"step {idx} [{step.kind}]: malformed ({exc})")
    return VerifyResult(True, None, None)


def _recompute_step(T: Triangulation, ctx: VerifierContext, step):
    kind = step.kind
    ids = step.ids
    u, v = ids["u"], ids["v"]
    frame = _PairFrame(T, u, v)
    dist_u = ctx.dist[u]
    L = frame.L
    Lf = float(L)
    fv = frame.pt(v)
    X, Y = fv

    if kind == "BaseEdge":
        _require(tuple(sorted((u, v))) in T.edge_set, "path edge absent")
        pu, pv = T.point_set[u], T.point_set[v]
        return euclidean(pu, pv), float(abs(pu.x - pv.x) + abs(pu.y - pv.y))

    if kind == "AxisSwap":
        _require(frame.transpose, "axis swap recorded for a gentle pair")
        return 0.0, 0.0

    if kind == "DirectBound":
        _f, bound = _display_bound(T, u, v)
        return dist_u[v], bound

    if kind == "PotentialInit":
        _require(tuple(sorted((u, v))) not in T.edge_set, "pair is adjacent")
        _require(not _pair_box_interior(T, u, v), "pair box is not empty")
        tri = tuple(ids["tri"])
        _require(tri in T.circumhomothets, "unknown triangle")
        lhs, rhs, rect = _potential_sides(frame, dist_u, ids["h"], ids["l"], tri)
        fu = frame.pt(u)
        _require(fu[0] == rect[0] and rect[1] <= fu[1] <= rect[3],
                 "segment start not on the W side")
        return lhs, rhs

    if kind == "PotentialPropagation":
        tri = tuple(ids["tri"])
        prev_tri = tuple(ids["prev_tri"])
        _require(tri in T.circumhomothets and prev_tri in T.circumhomothets,
                 "unknown triangle")
        ph, pl = ids["prev_h"], ids["prev_l"]
        fph, fpl = frame.pt(ph), frame.pt(pl)
        _require(abs(fph[1] - fpl[1]) > L * abs(fph[0] - fpl[0]),
                 "previous rectangle was inductive")
        plhs, prhs, _ = _potential_sides(frame, dist_u, ph, pl, prev_tri)
        _require(plhs <= prhs + EPS, "previous rectangle lacked potential")
        return _potential_sides(frame, dist_u, ids["h"], ids["l"], tri)[:2]

    if kind == "InductiveEast":
        if ids.get("tri") is None:
            _require(ids["c"] == u, "anchor without rectangle must be the origin")
            return 0.0, 0.0
        tri = tuple(ids["tri"])
        _require(tri in T.circumhomothets, "unknown triangle")
        c = ids["c"]
        lhs_p, rhs_p, rect = _potential_sides(frame, dist_u, ids["h"], ids["l"], tri)
        _require(lhs_p <= rhs_p + EPS, "rectangle lacks potential")
        fc = frame.pt(c)
        _require(fc[0] == rect[2] and rect[1] <= fc[1] <= rect[3],
                 "anchor is not on the E side")
        return dist_u[c], (1 + Lf) * float(fc[0])

    if kind in ("MaximalLowPath", "MaximalHighPath"):
        path = list(ids["path"])
        tris = [tuple(t) for t in ids["tris"]]
        edges = list(zip(path, path[1:]))
        _require(len(tris) == len(edges), "edge/triangle count mismatch")
        low = kind == "MaximalLowPath"
        total = 0.0
        for (a, b), tri in zip(edges, tris):
            _require(tuple(sorted((a, b))) in T.edge_set, "path edge absent")
            _require(tri in T.circumhomothets, "unknown triangle")
            rect = frame.rect(tri)
            _require(_side_of(frame.pt(a), rect) == "W", "path edge does not start on W")
            want = "S" if low else "N"
            _require(_side_of(frame.pt(b), rect) == want,
                     f"path edge does not end on {want}")
            total += T.edge_length(a, b)
        fs, fe = frame.pt(path[0]), frame.pt(path[-1])
        if low:
            rhs = float((fe[0] - fs[0]) + (fs[1] - fe[1]))
        else:
            rhs = float((fe[0] - fs[0]) + (fe[1] - fs[1]))
        return total, rhs

    if kind == "FirstInductive:1":
        tri = tuple(ids["tri"])
        _require(tri in T.circumhomothets, "unknown triangle")
        rect = frame.rect(tri)
        fvv = frame.pt(v)
        _require(fvv[0] == rect[2] and rect[1] <= fvv[1] <= rect[3],
                 "far endpoint is not on the E side of the last rectangle")
        return dist_u[v], (Lf + math.sqrt(Lf * Lf + 1)) * float(X) + float(Y)

    if kind.startswith("FirstInductive:2"):
        variant = kind.split(":")[1]
        tri = tuple(ids["tri"])
        _require(tri in T.circumhomothets, "unknown triangle")
        c, partner = ids["c"], ids["partner"]
        _require(tuple(sorted((c, partner))) in T.edge_set, "inductive segment is not an edge")
        rect = frame.rect(tri)
        fc, fp = frame.pt(c), frame.pt(partner)
        _require(_side_of(fc, rect) not in ("off", "interior"), "point not on rectangle")
        _require(_side_of(fp, rect) not in ("off", "interior"), "point not on rectangle")
        _require(abs(fc[1] - fp[1]) <= L * abs(fc[0] - fp[0]), "segment is not gentle")
        _require(fc[0] > fp[0], "wrong inductive endpoint")
        if variant in ("2a", "2b"):
            drop = float(fc[1] - Y)
        else:
            drop = -float(fc[1])
        if variant in ("2a", "2c"):
            _require(not frame.transpose, "variant requires the untransposed frame")
            lhs = dist_u[c] + drop
            rhs = (Lf + math.sqrt(Lf * Lf + 1)) * float(fc[0])
        else:
            _require(frame.transpose, "variant requires the transposed frame")
            lhs = dist_u[c] + drop / Lf
            rhs = (1 + math.sqrt(Lf * Lf + 1)) * float(fc[0])
        return lhs, rhs

    if kind in ("NEChain", "SEChain"):
        path = list(ids["path"])
        tris = [tuple(t) for t in ids["tris"]]
        edges = list(zip(path, path[1:]))
        _require(len(tris) == len(edges), "edge/triangle count mismatch")
        ne = kind == "NEChain"
        total = 0.0
        for (a, b), tri in zip(edges, tris):
            _require(tuple(sorted((a, b))) in T.edge_set, "path edge absent")
            _require(tri in T.circumhomothets, "unknown triangle")
            rect = frame.rect(tri)
            want_prev = "N" if ne else "S"
            _require(_side_of(frame.pt(a), rect) == want_prev,
                     f"chain edge does not start on {want_prev}")
            _require(_side_of(frame.pt(b), rect) == "E", "chain edge does not end on E")
            total += T.edge_length(a, b)
        fs, fe = frame.pt(path[0]), frame.pt(path[-1])
        if ne:
            _require(fe[1] - Y >= 0 and L * (X - fe[0]) >= fe[1] - Y,
                     "chain end misses the wedge condition")
            rhs = float((fe[0] - fs[0]) + (fs[1] - fe[1]))
        else:
            _require(Y - fe[1] >= 0 and L * (X - fe[0]) >= Y - fe[1],
                     "chain end misses the wedge condition")
            rhs = float((fe[0] - fs[0]) + (fe[1] - fs[1]))
        return total, rhs

    if kind.startswith("Recurse:"):
        parent_key = Fraction(ids["parent_key"])
        true_parent = smallest_homothet_scale(T.point_set[u], T.point_set[v], T.aspect)
        _require(parent_key == true_parent, "parent key does not match the pair")
        children = ids.get("children")
        if children is None:
            children = [ids["child"]]
        child_keys = [Fraction(s) for s in ids["child_keys"]]
        _require(len(children) == len(child_keys), "child key count mismatch")
        for (a, b), ck in zip(children, child_keys):
            true_child = smallest_homothet_scale(T.point_set[a], T.point_set[b], T.aspect)
            _require(ck == true_child, "child key does not match the child pair")
            _require(ck < parent_key, "recursion key did not decrease")
        if kind == "Recurse:case2-regionB":
            z = ids["via"]
            _require(z in _pair_box_interior(T, u, v), "split vertex is not in the pair box")
            _require(_region_of(T, u, v, z) == "B", "split vertex is not in the middle region")
        elif kind in ("Recurse:case2-edge-p", "Recurse:case2-edge-p'"):
            z = ids["via"]
            attach = ids["attach"]
            _require(attach in ("u", "v"), "bad attachment")
            anchor = u if attach == "u" else v
            _require(tuple(sorted((anchor, z))) in T.edge_set, "attachment edge absent")
            _require(z in _pair_box_interior(T, u, v), "via vertex is not in the pair box")
            _require(_region_of(T, u, v, z) == ids["region"], "region mismatch")
        _f, bound = _display_bound(T, u, v)
        return dist_u[v], bound

    raise _Fail(f"unknown step kind {kind}")


def _region_of(T: Triangulation, u: int, v: int, z: int) -> str:
    pu, pv, pz = T.work_points[u], T.work_points[v], T.work_points[z]
    A = T.aspect.A

    def gentle(a, b):
        return A * abs(a.x - b.x) >= abs(a.y - b.y)

    if gentle(pu, pv):
        if not gentle(pu, pz):
            return "A"
        if not gentle(pz, pv):
            return "C"
        return "B"
    if gentle(pv, pz):
        return "A"
    if gentle(pu, pz):
        return "C"
    return "B"


def require_verified(T: Triangulation, cert, ctx: Optional[VerifierContext] = None):
    res = verify_certificate(T, cert, ctx)
    if not res.ok:
        raise CertificateError(res.reason)
    return res
