# cython: language_level=3
"""Compiled geometry kernels: int64 coordinates, __int128 products.

Same API and same outputs as kernels.pure; callers guarantee coordinate
magnitudes small enough that degree-2 products fit in 128 bits (enforced by
kernels.active_kernel).
"""

import numpy as np

cimport numpy as cnp

ctypedef cnp.int64_t i64

cdef extern from *:
    ctypedef long long i128 "__int128"

KERNEL_NAME = "fast"


cdef inline int _sign128(i128 v) nogil:
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


cdef inline int _orient(i64 ax, i64 ay, i64 bx, i64 by, i64 cx, i64 cy) nogil:
    cdef i128 d = (<i128>(bx - ax)) * (cy - ay) - (<i128>(by - ay)) * (cx - ax)
    return _sign128(d)


def orient(ax, ay, bx, by, cx, cy):
    return _orient(ax, ay, bx, by, cx, cy)


def collinear_triples(xs, ys):
    cdef cnp.int64_t[::1] X = np.ascontiguousarray(xs, dtype=np.int64)
    cdef cnp.int64_t[::1] Y = np.ascontiguousarray(ys, dtype=np.int64)
    cdef Py_ssize_t n = X.shape[0]
    cdef Py_ssize_t i, j, k
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if _orient(X[i], Y[i], X[j], Y[j], X[k], Y[k]) == 0:
                    out.append((i, j, k))
    return out


cdef struct PairFrame:
    i64 xu, yu
    int sx, sy, swap
    i64 w, h


cdef inline PairFrame _pair_frame(i64 xu, i64 yu, i64 xv, i64 yv) nogil:
    cdef PairFrame f
    f.xu = xu
    f.yu = yu
    f.sx = 1 if xv > xu else -1
    f.sy = 1 if yv > yu else -1
    f.w = (xv - xu) * f.sx
    f.h = (yv - yu) * f.sy
    f.swap = 1 if f.h > f.w else 0
    if f.swap:
        f.w, f.h = f.h, f.w
    return f


cdef inline void _to_local(PairFrame* f, i64 px, i64 py, i64* a, i64* b) nogil:
    cdef i64 aa = (px - f.xu) * f.sx
    cdef i64 bb = (py - f.yu) * f.sy
    if f.swap:
        a[0] = bb
        b[0] = aa
    else:
        a[0] = aa
        b[0] = bb


cdef inline void _anchor_back(PairFrame* f, i64 t, i64* gx, i64* gy) nogil:
    # local square [0, w] x [t, t + w] -> global lower-left anchor
    cdef i64 tx = 0, ty = t, s = f.w, tmp
    if f.swap:
        tmp = tx
        tx = ty
        ty = tmp
    gx[0] = f.xu + (tx if f.sx > 0 else -(tx + s))
    gy[0] = f.yu + (ty if f.sy > 0 else -(ty + s))


cdef int _decide_pair(cnp.int64_t[::1] X, cnp.int64_t[::1] Y,
                      Py_ssize_t i, Py_ssize_t j,
                      i64* L, i64* R,
                      i64* out_ax, i64* out_ay, i64* out_s) nogil:
    """Slide-interval coverage decision; 1 and a witness if an edge exists."""
    cdef PairFrame f = _pair_frame(X[i], Y[i], X[j], Y[j])
    cdef i64 lo = f.h - f.w
    cdef Py_ssize_t n = X.shape[0]
    cdef Py_ssize_t k, m = 0, q
    cdef i64 a, b, l, r, cur, keyl, keyr
    for k in range(n):
        if k == i or k == j:
            continue
        _to_local(&f, X[k], Y[k], &a, &b)
        if 0 < a < f.w:
            l = b - f.w
            r = b
            if r > lo and l < 0:
                if l < lo and r > 0:
                    return 0  # single blocker covers the whole interval
                L[m] = l
                R[m] = r
                m += 1
    # insertion sort by left endpoint
    for k in range(1, m):
        keyl = L[k]
        keyr = R[k]
        q = k
        while q > 0 and L[q - 1] > keyl:
            L[q] = L[q - 1]
            R[q] = R[q - 1]
            q -= 1
        L[q] = keyl
        R[q] = keyr
    cur = lo
    for k in range(m):
        if L[k] >= cur:
            break
        if R[k] > cur:
            cur = R[k]
    if cur > 0:
        return 0
    _anchor_back(&f, cur, out_ax, out_ay)
    out_s[0] = f.w
    return 1


def edge_witness(xs, ys, i, j):
    cdef cnp.int64_t[::1] X = np.ascontiguousarray(xs, dtype=np.int64)
    cdef cnp.int64_t[::1] Y = np.ascontiguousarray(ys, dtype=np.int64)
    cdef cnp.int64_t[::1] L = np.empty(X.shape[0], dtype=np.int64)
    cdef cnp.int64_t[::1] R = np.empty(X.shape[0], dtype=np.int64)
    cdef i64 ax = 0, ay = 0, s = 0
    if _decide_pair(X, Y, i, j, &L[0], &R[0], &ax, &ay, &s):
        return (ax, ay, s)
    return None


def all_edges(xs, ys):
    cdef cnp.int64_t[::1] X = np.ascontiguousarray(xs, dtype=np.int64)
    cdef cnp.int64_t[::1] Y = np.ascontiguousarray(ys, dtype=np.int64)
    cdef Py_ssize_t n = X.shape[0]
    cdef cnp.int64_t[::1] L = np.empty(max(n, 1), dtype=np.int64)
    cdef cnp.int64_t[::1] R = np.empty(max(n, 1), dtype=np.int64)
    cdef Py_ssize_t i, j
    cdef i64 ax = 0, ay = 0, s = 0
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            if _decide_pair(X, Y, i, j, &L[0], &R[0], &ax, &ay, &s):
                out.append((i, j, ax, ay, s))
    return out


def classify_against_square(xs, ys, ax, ay, s):
    cdef cnp.int64_t[::1] X = np.ascontiguousarray(xs, dtype=np.int64)
    cdef cnp.int64_t[::1] Y = np.ascontiguousarray(ys, dtype=np.int64)
    cdef i64 a0 = ax, b0 = ay, a1 = ax + s, b1 = ay + s
    cdef Py_ssize_t k, n = X.shape[0]
    inside = []
    boundary = []
    for k in range(n):
        if a0 < X[k] < a1 and b0 < Y[k] < b1:
            inside.append(k)
        elif a0 <= X[k] <= a1 and b0 <= Y[k] <= b1:
            boundary.append(k)
    return inside, boundary


def crossing_pairs(xs, ys, edges):
    cdef cnp.int64_t[::1] X = np.ascontiguousarray(xs, dtype=np.int64)
    cdef cnp.int64_t[::1] Y = np.ascontiguousarray(ys, dtype=np.int64)
    E = np.ascontiguousarray(edges, dtype=np.int64).reshape(-1, 2)
    cdef cnp.int64_t[:, ::1] EV = E
    cdef Py_ssize_t m = EV.shape[0]
    cdef Py_ssize_t e1, e2
    cdef Py_ssize_t a, b, c, d
    cdef int d1, d2, d3, d4
    out = []
    for e1 in range(m):
        a = EV[e1, 0]
        b = EV[e1, 1]
        for e2 in range(e1 + 1, m):
            c = EV[e2, 0]
            d = EV[e2, 1]
            if a == c or a == d or b == c or b == d:
                continue
            d1 = _orient(X[a], Y[a], X[b], Y[b], X[c], Y[c])
            d2 = _orient(X[a], Y[a], X[b], Y[b], X[d], Y[d])
            if d1 * d2 >= 0:
                continue
            d3 = _orient(X[c], Y[c], X[d], Y[d], X[a], Y[a])
            d4 = _orient(X[c], Y[c], X[d], Y[d], X[b], Y[b])
            if d3 * d4 < 0:
                out.append((e1, e2))
    return out
