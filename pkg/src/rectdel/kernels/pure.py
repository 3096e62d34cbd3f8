"""Pure-Python geometry kernels over arbitrary-precision integers.

Reference implementation for the compiled module; always exact regardless of
coordinate magnitude. All inputs are integer coordinate lists obtained by
clearing denominators.

Edge decisions work in "square coordinates": coordinates pre-scaled so that
homothets of the construction rectangle become axis-aligned squares. For a
pair u, v (reflected so v lies up-right of u at (w, h) with w >= h after an
axis swap), every square with u and v on its boundary and side s > w is
pinned at a corner of the minimal-side family, and a point blocking such a
square also blocks the corresponding minimal-side square. The decision
therefore reduces to coverage of the slide interval t in [h - w, 0] of
minimal squares [0, w] x [t, t + w] by the open intervals (b - w, b) of
blocking points (a, b) with 0 < a < w.
"""

from __future__ import annotations

KERNEL_NAME = "pure"


def orient(ax, ay, bx, by, cx, cy):
    """Sign of cross(b - a, c - a)."""
    d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return (d > 0) - (d < 0)


def collinear_triples(xs, ys):
    n = len(xs)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if orient(xs[i], ys[i], xs[j], ys[j], xs[k], ys[k]) == 0:
                    out.append((i, j, k))
    return out


def _pair_frame(xs, ys, i, j):
    """Reflect/swap so the pair becomes (0,0) -> (w,h) with w >= h > 0.

    Returns (w, h, to_local, anchor_back) where to_local maps a global point
    and anchor_back maps a local square (t_x, t_y, s) back to a global
    lower-left anchor.
    """
    xu, yu = xs[i], ys[i]
    dx = xs[j] - xu
    dy = ys[j] - yu
    sx = 1 if dx > 0 else -1
    sy = 1 if dy > 0 else -1
    w = dx * sx
    h = dy * sy
    swap = h > w
    if swap:
        w, h = h, w

    def to_local(px, py):
        a = (px - xu) * sx
        b = (py - yu) * sy
        return (b, a) if swap else (a, b)

    def anchor_back(t_x, t_y, s):
        if swap:
            t_x, t_y = t_y, t_x
        gx = xu + (t_x if sx > 0 else -(t_x + s))
        gy = yu + (t_y if sy > 0 else -(t_y + s))
        return gx, gy

    return w, h, to_local, anchor_back


def edge_witness(xs, ys, i, j):
    """Empty-square witness for the pair (i, j), or None.

    Returns (ax, ay, s): the lower-left anchor and side of a square with
    both points on its boundary and no other point strictly inside.
    """
    w, h, to_local, anchor_back = _pair_frame(xs, ys, i, j)
    lo = h - w
    intervals = []
    for k in range(len(xs)):
        if k == i or k == j:
            continue
        a, b = to_local(xs[k], ys[k])
        if 0 < a < w:
            l, r = b - w, b
            if r > lo and l < 0:
                intervals.append((l, r))
    intervals.sort()
    cur = lo
    for l, r in intervals:
        if l >= cur:
            break
        if r > cur:
            cur = r
    if cur > 0:
        return None
    ax, ay = anchor_back(0, cur, w)
    return (ax, ay, w)


def all_edges(xs, ys):
    """All pairs with an empty-square witness: list of (i, j, ax, ay, s)."""
    n = len(xs)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            wit = edge_witness(xs, ys, i, j)
            if wit is not None:
                out.append((i, j) + wit)
    return out


def classify_against_square(xs, ys, ax, ay, s):
    """Ids strictly inside and ids exactly on the boundary of a square."""
    inside = []
    boundary = []
    bx = ax + s
    by = ay + s
    for k in range(len(xs)):
        x, y = xs[k], ys[k]
        if ax < x < bx and ay < y < by:
            inside.append(k)
        elif ax <= x <= bx and ay <= y <= by:
            boundary.append(k)
    return inside, boundary


def crossing_pairs(xs, ys, edges):
    """Pairs of edge indices whose open segments properly cross."""
    m = len(edges)
    out = []
    for e1 in range(m):
        a, b = edges[e1]
        ax, ay, bx, by = xs[a], ys[a], xs[b], ys[b]
        for e2 in range(e1 + 1, m):
            c, d = edges[e2]
            if a == c or a == d or b == c or b == d:
                continue
            cx, cy, dx, dy = xs[c], ys[c], xs[d], ys[d]
            d1 = orient(ax, ay, bx, by, cx, cy)
            d2 = orient(ax, ay, bx, by, dx, dy)
            if d1 * d2 >= 0:
                continue
            d3 = orient(cx, cy, dx, dy, ax, ay)
            d4 = orient(cx, cy, dx, dy, bx, by)
            if d3 * d4 < 0:
                out.append((e1, e2))
    return out
