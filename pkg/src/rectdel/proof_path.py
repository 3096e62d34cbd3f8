"""Certified path extraction.

Walks the constructive argument behind the tight spanning-ratio bound: for a
pair with an empty corner box, follow the triangle chain (potential
propagation, first inductive rectangle, maximal high/low path, NE/SE chain)
and recurse on a strictly smaller pair; for a non-empty box, split the box
into regions and recurse through an interior vertex. Every inequality used
is recorded as a certificate step with its numeric slack; whenever a
structural precondition fails to hold on the instance, the extractor falls
back to the measured shortest path, certified directly against the
directional bound.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .analysis import EPS, directional_bound, path_between, shortest_path_lengths
from .chains import TriangleChain, build_chain, make_frame
from .delaunay import Triangulation
from .geometry import AspectRatio, Point, euclidean, rect_cw_distance, smallest_homothet_scale


@dataclass
class CertStep:
    kind: str
    ids: dict
    lhs: float
    rhs: float

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    def to_doc(self) -> dict:
        return {"kind": self.kind, "ids": self.ids, "lhs": self.lhs,
                "rhs": self.rhs, "slack": self.slack}


@dataclass
class Certificate:
    """Machine-checkable trace witnessing a path-length bound for one pair."""

    u: int
    v: int
    aspect: str
    flag: str
    claimed_bound: float
    path: list
    steps: list

    def to_json(self) -> str:
        doc = {
            "pair": [self.u, self.v],
            "aspect": self.aspect,
            "flag": self.flag,
            "claimed_bound": self.claimed_bound,
            "path": list(self.path),
            "steps": [s.to_doc() for s in self.steps],
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"

    @staticmethod
    def from_json(text: str) -> "Certificate":
        doc = json.loads(text)
        steps = [CertStep(s["kind"], s["ids"], s["lhs"], s["rhs"]) for s in doc["steps"]]
        return Certificate(doc["pair"][0], doc["pair"][1], doc["aspect"], doc["flag"],
                           doc["claimed_bound"], list(doc["path"]), steps)


# ---------------------------------------------------------------------------
# chain-level operations


def has_potential(chain: TriangleChain, i: int, dt_from_u) -> tuple[bool, float, float]:
    """Check d_t(u,h_i) + d_t(u,l_i) + d_R(h_i,l_i) <= (2+2L) * x_i.

    dt_from_u is indexable by vertex id with binary64 distances from u.
    Returns (holds within EPS, lhs, rhs).
    """
    T = chain_triangulation(chain)
    frame = chain.frame
    h, l = chain.h(i), chain.l(i)
    xmin, ymin, xmax, ymax = chain.rect(i)
    fh = frame.map_point(T.work_points[h])
    fl = frame.map_point(T.work_points[l])
    d_r = rect_cw_distance(xmin, ymin, xmax - xmin, ymax - ymin, fh, fl)
    lhs = float(dt_from_u[h]) + float(dt_from_u[l]) + float(d_r)
    rhs = float((2 + 2 * frame.L) * xmax)
    return lhs <= rhs + EPS, lhs, rhs


def chain_triangulation(chain: TriangleChain) -> Triangulation:
    T = getattr(chain, "_T", None)
    if T is None:
        raise ValueError("chain is not bound to a triangulation")
    return T


def bind_chain(chain: TriangleChain, T: Triangulation) -> TriangleChain:
    chain._T = T
    return chain


def inductive_info(chain: TriangleChain, i: int):
    """None when the exit segment (l_i, h_i) is steep; otherwise the
    inductive point (larger frame-x endpoint) and its side of R_i."""
    T = chain_triangulation(chain)
    frame = chain.frame
    h, l = chain.h(i), chain.l(i)
    fh = frame.map_point(T.work_points[h])
    fl = frame.map_point(T.work_points[l])
    L = frame.L
    if abs(fh[1] - fl[1]) > L * abs(fh[0] - fl[0]):
        return None
    c, fc = (h, fh) if fh[0] > fl[0] else (l, fl)
    return c, _side_on_rect(fc, chain.rect(i))


def _side_on_rect(fp, rect) -> str:
    xmin, ymin, xmax, ymax = rect
    if fp[0] == xmin:
        return "W"
    if fp[0] == xmax:
        return "E"
    if fp[1] == ymax:
        return "N"
    if fp[1] == ymin:
        return "S"
    return "interior"


def _on_east(chain: TriangleChain, pid: int, i: int) -> bool:
    T = chain_triangulation(chain)
    fp = chain.frame.map_point(T.work_points[pid])
    xmin, ymin, xmax, ymax = chain.rect(i)
    return fp[0] == xmax and ymin <= fp[1] <= ymax


def maximal_path(chain: TriangleChain, j: int, which: str) -> tuple[int, list]:
    """Maximal high/low path ending at label j: walk back while the label is
    not on the E side of its rectangle. Returns (start index, vertex ids)."""
    label = chain.h if which == "high" else chain.l
    if _on_east(chain, label(j), j):
        return j, [label(j)]
    i = j
    while i - 1 >= 1 and not _on_east(chain, label(i - 1), i - 1):
        i -= 1
    if i - 1 >= 1:
        i -= 1  # label(i) on E side starts the path
    else:
        i = 0  # path starts at u
    verts = [label(i)]
    for m in range(i + 1, j + 1):
        if label(m) != verts[-1]:
            verts.append(label(m))
    return i, verts


def classify_region(p: Point, u: Point, v: Point, aspect: AspectRatio) -> str:
    """Region of a point strictly inside the corner box of (u, v).

    For a gentle pair (A|dx| >= |dy| in the canonical orientation): "A" holds
    when (u,p) is steep, "C" when (p,v) is steep, "B" otherwise. For a steep
    pair the mirrored definitions apply ("A" when (v,p) is gentle, "C" when
    (u,p) is gentle, "B" when both are steep).
    """
    def work(q: Point) -> Point:
        return q.transposed() if aspect.transposed else q

    pw, uw, vw = work(p), work(u), work(v)
    if not (min(uw.x, vw.x) < pw.x < max(uw.x, vw.x)
            and min(uw.y, vw.y) < pw.y < max(uw.y, vw.y)):
        raise ValueError("point is not strictly inside the pair box")
    A = aspect.A

    def gentle(a: Point, b: Point) -> bool:
        return A * abs(a.x - b.x) >= abs(a.y - b.y)

    if gentle(uw, vw):
        if not gentle(uw, pw):
            return "A"
        if not gentle(pw, vw):
            return "C"
        return "B"
    if gentle(vw, pw):
        return "A"
    if gentle(uw, pw):
        return "C"
    return "B"


# ---------------------------------------------------------------------------
# extraction


def _pair_key(T: Triangulation, a: int, b: int) -> Fraction:
    return smallest_homothet_scale(T.point_set[a], T.point_set[b], T.aspect)


def _path_length(T: Triangulation, path) -> float:
    return sum(T.edge_length(path[i], path[i + 1]) for i in range(len(path) - 1))


def _concat(*segments) -> list:
    out = []
    for seg in segments:
        for p in seg:
            if not out or out[-1] != p:
                out.append(p)
    return out


class _Fallback(Exception):
    def __init__(self, reason: str):
        self.reason = reason


@dataclass
class _Node:
    path: list
    steps: list
    length: float
    fallback_reason: Optional[str] = None


class ProofPathExtractor:
    """Extracts certified paths for pairs of one triangulation; memoizes
    sub-results so the recursion over pairs is shared."""

    def __init__(self, T: Triangulation):
        self.T = T
        self.dist, self.pred = shortest_path_lengths(T)
        self.memo: dict = {}
        self.fallbacks = 0
        self.extracted = 0

    # -- helpers ----------------------------------------------------------

    def _display_bound(self, u: int, v: int) -> tuple[str, float]:
        return directional_bound(self.T.point_set[u], self.T.point_set[v], self.T.aspect)

    def _sp_path(self, u: int, v: int) -> list:
        return path_between(self.pred, u, v)

    def _box_interior_ids(self, u: int, v: int) -> list:
        T = self.T
        x0, x1 = sorted((T.ix[u], T.ix[v]))
        y0, y1 = sorted((T.iy[u], T.iy[v]))
        out = []
        for p in range(len(T)):
            if p != u and p != v and x0 < T.ix[p] < x1 and y0 < T.iy[p] < y1:
                out.append(p)
        return out

    def _direct_node(self, u: int, v: int, reason: str) -> _Node:
        path = self._sp_path(u, v)
        length = _path_length(self.T, path)
        _flag, bound = self._display_bound(u, v)
        step = CertStep("DirectBound", {"u": u, "v": v, "reason": reason}, length, bound)
        self.fallbacks += 1
        return _Node(path, [step], length, reason)

    # -- main recursion ----------------------------------------------------

    def extract(self, u: int, v: int) -> _Node:
        key = (u, v)
        if key in self.memo:
            return self.memo[key]
        self.extracted += 1
        node = self._extract_uncached(u, v)
        flag, bound = self._display_bound(u, v)
        if node.length > bound + EPS:
            node = self._direct_node(u, v, "assembled length exceeded the display bound")
        self.memo[key] = node
        return node

    def _extract_uncached(self, u: int, v: int) -> _Node:
        T = self.T
        if T.has_edge(u, v):
            pu, pv = T.point_set[u], T.point_set[v]
            lhs = euclidean(pu, pv)
            rhs = float(abs(pu.x - pv.x) + abs(pu.y - pv.y))
            step = CertStep("BaseEdge", {"u": u, "v": v}, lhs, rhs)
            return _Node([u, v], [step], lhs)
        steps: list = []
        frame = make_frame(T, u, v)
        if frame.transpose:
            steps.append(CertStep("AxisSwap", {"u": u, "v": v}, 0.0, 0.0))
        inside = self._box_interior_ids(u, v)
        try:
            if inside:
                return self._case_box_occupied(u, v, inside, steps)
            return self._case_box_empty(u, v, frame, steps)
        except _Fallback as fb:
            return self._direct_node(u, v, fb.reason)

    # -- box occupied: region split ---------------------------------------

    def _case_box_occupied(self, u: int, v: int, inside, steps) -> _Node:
        T = self.T
        pu, pv = T.point_set[u], T.point_set[v]
        parent_key = _pair_key(T, u, v)
        regions = {z: classify_region(T.point_set[z], pu, pv, T.aspect) for z in inside}
        b_zone = [z for z in inside if regions[z] == "B"]
        if b_zone:
            z = min(b_zone, key=lambda w: (_pair_key(T, u, w), w))
            left = self._recurse(u, z, parent_key, "region-B split")
            right = self._recurse(z, v, parent_key, "region-B split")
            path = _concat(left.path, right.path)
            length = _path_length(T, path)
            _f, bound = self._display_bound(u, v)
            steps.append(CertStep(
                "Recurse:case2-regionB",
                {"u": u, "v": v, "via": z,
                 "children": [[u, z], [z, v]],
                 "parent_key": str(parent_key),
                 "child_keys": [str(_pair_key(T, u, z)), str(_pair_key(T, z, v))]},
                float(self.dist[u][v]), bound))
            steps.extend(left.steps)
            steps.extend(right.steps)
            return _Node(path, steps, length)

        u_cands = [z for z in inside if T.has_edge(u, z)]
        v_cands = [z for z in inside if T.has_edge(z, v)]
        if u_cands:
            z = min(u_cands, key=lambda w: (_pair_key(T, u, w), w))
            attach = "u"
        elif v_cands:
            z = min(v_cands, key=lambda w: (_pair_key(T, v, w), w))
            attach = "v"
        else:
            raise _Fallback("occupied box with empty middle region and no "
                            "box-interior neighbor of either endpoint")
        variant = "case2-edge-p" if (
            (attach == "u" and regions[z] == "A") or (attach == "v" and regions[z] == "C")
        ) else "case2-edge-p'"
        if attach == "u":
            child = self._recurse(z, v, parent_key, variant)
            path = _concat([u, z], child.path)
            child_pair = [z, v]
            child_key = _pair_key(T, z, v)
        else:
            child = self._recurse(u, z, parent_key, variant)
            path = _concat(child.path, [z, v])
            child_pair = [u, z]
            child_key = _pair_key(T, u, z)
        length = _path_length(T, path)
        _f, bound = self._display_bound(u, v)
        steps.append(CertStep(
            f"Recurse:{variant}",
            {"u": u, "v": v, "via": z, "attach": attach, "region": regions[z],
             "child": child_pair, "parent_key": str(parent_key),
             "child_keys": [str(child_key)]},
            float(self.dist[u][v]), bound))
        steps.extend(child.steps)
        return _Node(path, steps, length)

    def _recurse(self, a: int, b: int, parent_key: Fraction, context: str) -> _Node:
        child_key = _pair_key(self.T, a, b)
        if not child_key < parent_key:
            raise _Fallback(f"recursion key did not decrease in {context}")
        return self.extract(a, b)

    # -- box empty: chain machinery ---------------------------------------

    def _case_box_empty(self, u: int, v: int, frame, steps) -> _Node:
        T = self.T
        chain = build_chain(T, u, v)
        if chain is None:
            raise _Fallback("no contiguous triangle chain crosses the segment")
        bind_chain(chain, T)
        dt = self.dist[u]
        k = chain.k

        j0 = None
        for i in range(1, k + 1):
            info = inductive_info(chain, i)
            if info is not None:
                j0 = i
                break
        limit = j0 if j0 is not None else k

        ok, lhs, rhs = has_potential(chain, 1, dt)
        if not ok:
            raise _Fallback("first chain rectangle lacks potential")
        if frame.map_point(T.work_points[u])[0] != chain.rect(1)[0]:
            raise _Fallback("segment start is not on the W side of the first rectangle")
        steps.append(CertStep(
            "PotentialInit",
            {"u": u, "v": v, "h": chain.h(1), "l": chain.l(1),
             "tri": list(chain.links[0].tri), "index": 1},
            lhs, rhs))
        for i in range(1, limit):
            ok, lhs, rhs = has_potential(chain, i + 1, dt)
            if not ok:
                raise _Fallback(f"potential did not propagate to rectangle {i + 1}")
            steps.append(CertStep(
                "PotentialPropagation",
                {"u": u, "v": v, "h": chain.h(i + 1), "l": chain.l(i + 1),
                 "tri": list(chain.links[i].tri), "index": i + 1,
                 "prev_h": chain.h(i), "prev_l": chain.l(i),
                 "prev_tri": list(chain.links[i - 1].tri)},
                lhs, rhs))

        if j0 is None:
            return self._property1(u, v, chain, dt, steps)
        info = inductive_info(chain, j0)
        c, _side = info
        if c == chain.h(j0):
            return self._inductive_route(u, v, chain, dt, steps, j0, high_target=True)
        return self._inductive_route(u, v, chain, dt, steps, j0, high_target=False)

    def _property1(self, u, v, chain, dt, steps) -> _Node:
        T = self.T
        frame = chain.frame
        L = frame.L
        Lf = float(L)
        k = chain.k
        if not _on_east(chain, v, k):
            raise _Fallback("segment end is not on the E side of the last rectangle")
        x_k = float(chain.x_east(k))
        lhs = float(dt[v])
        rhs = (1 + Lf) * x_k
        if lhs > rhs + EPS:
            raise _Fallback("east-side distance bound failed at the last rectangle")
        steps.append(CertStep(
            "InductiveEast",
            {"u": u, "v": v, "c": v, "h": chain.h(k), "l": chain.l(k),
             "tri": list(chain.links[k - 1].tri), "index": k},
            lhs, rhs))
        fv = chain.frame.map_point(T.work_points[v])
        disp = (Lf + math.sqrt(Lf * Lf + 1)) * float(fv[0]) + float(fv[1])
        steps.append(CertStep(
            "FirstInductive:1",
            {"u": u, "v": v, "tri": list(chain.links[k - 1].tri)},
            float(dt[v]), disp))
        path = self._sp_path(u, v)
        return _Node(path, steps, _path_length(T, path))

    def _inductive_route(self, u, v, chain, dt, steps, j0, high_target: bool) -> _Node:
        """First inductive rectangle at index j0; inductive point c = h_j0
        when high_target else l_j0. Builds: shortest path to the maximal
        (low/high) path start, the maximal path, the gentle connector, the
        NE/SE chain, then recursion toward v."""
        T = self.T
        frame = chain.frame
        L = frame.L
        Lf = float(L)
        fpt = lambda pid: frame.map_point(T.work_points[pid])
        X, Y = fpt(v)

        c = chain.h(j0) if high_target else chain.l(j0)
        partner = chain.l(j0) if high_target else chain.h(j0)
        which = "low" if high_target else "high"
        i0, mpath = maximal_path(chain, j0, which)
        start = mpath[0]

        # east-side anchor of the maximal path start
        if i0 == 0:
            lhs0, rhs0 = 0.0, 0.0
            anchor_ids = {"u": u, "v": v, "c": u, "tri": None, "index": 0,
                          "h": u, "l": u}
        else:
            if not _on_east(chain, start, i0):
                raise _Fallback("maximal path start is not on an E side")
            lhs0 = float(dt[start])
            rhs0 = (1 + Lf) * float(chain.x_east(i0))
            anchor_ids = {"u": u, "v": v, "c": start,
                          "tri": list(chain.links[i0 - 1].tri), "index": i0,
                          "h": chain.h(i0), "l": chain.l(i0)}
        if lhs0 > rhs0 + EPS:
            raise _Fallback("east-side distance bound failed at the maximal path start")
        steps.append(CertStep("InductiveEast", anchor_ids, lhs0, rhs0))

        mlen = _path_length(T, mpath)
        edge_tris = self._label_path_tris(chain, i0, j0, which)
        if edge_tris is None:
            raise _Fallback("maximal path edge classification failed")
        fs = fpt(start)
        fe = fpt(mpath[-1])
        if which == "low":
            kind = "MaximalLowPath"
            rhs_m = float((fe[0] - fs[0]) + (fs[1] - fe[1]))
        else:
            kind = "MaximalHighPath"
            rhs_m = float((fe[0] - fs[0]) + (fe[1] - fs[1]))
        if mlen > rhs_m + EPS:
            raise _Fallback("maximal path length bound failed")
        steps.append(CertStep(
            kind,
            {"u": u, "v": v, "path": list(mpath), "tris": edge_tris,
             "from_index": i0, "to_index": j0},
            mlen, rhs_m))

        fc = fpt(c)
        transposed = frame.transpose
        if high_target:
            variant = "2a" if not transposed else "2b"
            drop = float(fc[1] - Y)
            coeff = 1.0 if not transposed else 1.0 / Lf
            lhs_fi = float(dt[c]) + coeff * drop
        else:
            variant = "2c" if not transposed else "2d"
            coeff = 1.0 if not transposed else 1.0 / Lf
            lhs_fi = float(dt[c]) - coeff * float(fc[1])
        beta = (Lf + math.sqrt(Lf * Lf + 1)) if not transposed else (1 + math.sqrt(Lf * Lf + 1))
        rhs_fi = beta * float(fc[0])
        if lhs_fi > rhs_fi + EPS:
            raise _Fallback(f"first-inductive bound {variant} failed")
        steps.append(CertStep(
            f"FirstInductive:{variant}",
            {"u": u, "v": v, "c": c, "partner": partner,
             "tri": list(chain.links[j0 - 1].tri), "index": j0},
            lhs_fi, rhs_fi))

        walk_ids, walk_tris, target = self._directional_walk(chain, j0, high_target)
        if len(walk_ids) > 1:
            wlen = _path_length(T, walk_ids)
            f0 = fpt(walk_ids[0])
            f1 = fpt(walk_ids[-1])
            if high_target:
                rhs_w = float((f1[0] - f0[0]) + (f0[1] - f1[1]))
                kind_w = "NEChain"
            else:
                rhs_w = float((f1[0] - f0[0]) + (f1[1] - f0[1]))
                kind_w = "SEChain"
            if wlen > rhs_w + EPS:
                raise _Fallback("directional chain length bound failed")
            steps.append(CertStep(
                kind_w,
                {"u": u, "v": v, "path": list(walk_ids), "tris": walk_tris},
                wlen, rhs_w))

        prefix = _concat(self._sp_path(u, start), mpath, [c], walk_ids)
        if target == v:
            path = prefix
            length = _path_length(T, path)
            return _Node(path, steps, length)
        parent_key = _pair_key(T, u, v)
        child = self._recurse(target, v, parent_key, "chain walk")
        path = _concat(prefix, child.path)
        length = _path_length(T, path)
        _f, bound = self._display_bound(u, v)
        steps.append(CertStep(
            "Recurse:case1",
            {"u": u, "v": v, "via": target, "child": [target, v],
             "parent_key": str(parent_key),
             "child_keys": [str(_pair_key(T, target, v))]},
            float(self.dist[u][v]), bound))
        steps.extend(child.steps)
        return _Node(path, steps, length)

    def _label_path_tris(self, chain, i0, j0, which):
        """Triangles carrying each maximal-path edge, with exact W-N / W-S
        classification; None when classification fails."""
        T = self.T
        frame = chain.frame
        label = chain.l if which == "low" else chain.h
        tris = []
        prev = label(i0)
        for m in range(i0 + 1, j0 + 1):
            nxt = label(m)
            if nxt == prev:
                continue
            rect = chain.rect(m)
            fp = frame.map_point(T.work_points[prev])
            fq = frame.map_point(T.work_points[nxt])
            if _side_on_rect(fp, rect) != "W":
                return None
            want = "S" if which == "low" else "N"
            if _side_on_rect(fq, rect) not in (want,):
                return None
            tris.append(list(chain.links[m - 1].tri))
            prev = nxt
        return tris

    def _directional_walk(self, chain, j0, high_target: bool):
        """Walk labels from j0 until the wedge condition of the far endpoint
        holds: L*(X - x_label) >= |y_label - Y| with the label on the right
        vertical level. Returns (vertex path, per-edge triangles, target)."""
        T = self.T
        frame = chain.frame
        L = frame.L
        label = chain.h if high_target else chain.l
        X, Y = frame.map_point(T.work_points[chain.v])
        j1 = None
        for m in range(j0, chain.k + 1):
            fx, fy = frame.map_point(T.work_points[label(m)])
            lvl = fy - Y if high_target else Y - fy
            if lvl >= 0 and L * (X - fx) >= lvl:
                j1 = m
                break
        if j1 is None:
            raise _Fallback("no chain label reaches the gentle wedge of the far endpoint")
        ids = [label(j0)]
        tris = []
        for m in range(j0 + 1, j1 + 1):
            nxt = label(m)
            if nxt == ids[-1]:
                continue
            rect = chain.rect(m)
            fp = frame.map_point(T.work_points[ids[-1]])
            fq = frame.map_point(T.work_points[nxt])
            want_prev = "N" if high_target else "S"
            if _side_on_rect(fp, rect) != want_prev or _side_on_rect(fq, rect) != "E":
                raise _Fallback("directional chain edge classification failed")
            tris.append(list(chain.links[m - 1].tri))
            ids.append(nxt)
        return ids, tris, ids[-1]


@dataclass
class LemmaCheck:
    """One replayed lemma instance: an inequality with its sides, or an
    exact classification claim (lhs = rhs = 0)."""

    kind: str
    index: int
    ok: bool
    lhs: float
    rhs: float

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs


def replay_lemmas(T: Triangulation, u: int, v: int, dist=None) -> list:
    """Replay every chain lemma on the pair's chain, independently of path
    extraction: potential initialization and propagation, east-side anchor
    distances, maximal-path length bounds, and NE/SE classification under
    the directional-walk precondition. Pairs without a chain, adjacent
    pairs, and pairs with occupied boxes replay nothing."""
    if T.has_edge(u, v):
        return []
    pu, pv = T.point_set[u], T.point_set[v]
    x0, x1 = sorted((pu.x, pv.x))
    y0, y1 = sorted((pu.y, pv.y))
    for k in range(len(T)):
        p = T.point_set[k]
        if k not in (u, v) and x0 < p.x < x1 and y0 < p.y < y1:
            return []  # occupied box: the chain lemmas assume it empty
    chain = build_chain(T, u, v)
    if chain is None:
        return []
    bind_chain(chain, T)
    if dist is None:
        dist, _ = shortest_path_lengths(T)
    dt = dist[u]
    frame = chain.frame
    L = frame.L
    Lf = float(L)
    fpt = lambda pid: frame.map_point(T.work_points[pid])
    X, Y = fpt(v)
    out = []

    ok, lhs, rhs = has_potential(chain, 1, dt)
    out.append(LemmaCheck("potential_init", 1, ok, lhs, rhs))
    pot = {1: ok}
    for i in range(1, chain.k):
        if not pot.get(i):
            break
        if inductive_info(chain, i) is not None:
            break
        ok, lhs, rhs = has_potential(chain, i + 1, dt)
        out.append(LemmaCheck("potential_propagation", i + 1, ok, lhs, rhs))
        pot[i + 1] = ok

    for i in range(1, chain.k + 1):
        if not pot.get(i):
            continue
        for c in (chain.h(i), chain.l(i)):
            if _on_east(chain, c, i):
                lhs = float(dt[c])
                rhs = (1 + Lf) * float(fpt(c)[0])
                out.append(LemmaCheck("inductive_east", i, lhs <= rhs + EPS, lhs, rhs))

    for j in range(1, chain.k + 1):
        for which in ("high", "low"):
            i0, mpath = maximal_path(chain, j, which)
            if len(mpath) < 2:
                continue
            mlen = _path_length(T, mpath)
            fs, fe = fpt(mpath[0]), fpt(mpath[-1])
            if which == "high":
                rhs = float((fe[0] - fs[0]) + (fe[1] - fs[1]))
            else:
                rhs = float((fe[0] - fs[0]) + (fs[1] - fe[1]))
            out.append(LemmaCheck(f"maximal_{which}_path", j, mlen <= rhs + EPS, mlen, rhs))

    for i in range(1, chain.k + 1):
        info = inductive_info(chain, i)
        if info is None:
            continue
        c, _side = info
        high = c == chain.h(i)
        label = chain.h if high else chain.l
        fc = fpt(c)
        lvl_c = fc[1] - Y if high else Y - fc[1]
        if not (0 < L * (X - fc[0]) < lvl_c):
            continue  # directional-walk precondition not met at the anchor
        prev = c
        for m in range(i + 1, chain.k + 1):
            fp = fpt(prev)
            lvl = fp[1] - Y if high else Y - fp[1]
            if not (0 < L * (X - fp[0]) < lvl):
                break  # walked out of the precondition wedge
            nxt = label(m)
            if nxt == prev:
                continue
            rect = chain.rect(m)
            want_prev = "N" if high else "S"
            good = (_side_on_rect(fpt(prev), rect) == want_prev
                    and _side_on_rect(fpt(nxt), rect) == "E")
            out.append(LemmaCheck("ne_chain_edge" if high else "se_chain_edge",
                                  m, good, 0.0, 0.0))
            prev = nxt
    return out


def extract_proof_path(T: Triangulation, u: int, v: int,
                       extractor: Optional[ProofPathExtractor] = None):
    """Certified path for one pair: returns (path, Certificate)."""
    if u == v:
        raise ValueError("degenerate pair")
    ex = extractor if extractor is not None else ProofPathExtractor(T)
    node = ex.extract(u, v)
    flag, bound = directional_bound(T.point_set[u], T.point_set[v], T.aspect)
    cert = Certificate(u, v, str(T.aspect), flag, bound, node.path, node.steps)
    return node.path, cert


def extract_all_pairs(T: Triangulation):
    """Certificates for every unordered pair, sharing one extractor."""
    ex = ProofPathExtractor(T)
    out = {}
    n = len(T)
    for u in range(n):
        for v in range(u + 1, n):
            _path, cert = extract_proof_path(T, u, v, ex)
            out[(u, v)] = cert
    return out, ex
