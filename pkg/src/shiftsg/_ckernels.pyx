# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops; see ``_pykernels`` for semantics."""

from libc.stdint cimport int64_t

INF = (<int64_t>1) << 62
cdef int64_t _INF = (<int64_t>1) << 62


cdef inline int64_t _gcd(int64_t a, int64_t b) nogil:
    while b:
        a, b = b, a % b
    return a


def round_robin_pass(int64_t[::1] w, int64_t a):
    cdef Py_ssize_t m = w.shape[0]
    cdef Py_ssize_t step = a % m
    cdef Py_ssize_t g = _gcd(step, m) if step else m
    cdef Py_ssize_t cycle = m // g
    cdef Py_ssize_t p, r, best, nxt, t
    cdef int64_t cand
    with nogil:
        for p in range(g):
            best = p
            r = p
            for t in range(cycle):
                if w[r] < w[best]:
                    best = r
                r += step
                if r >= m:
                    r -= m
            if w[best] >= _INF:
                continue
            r = best
            for t in range(cycle - 1):
                nxt = r + step
                if nxt >= m:
                    nxt -= m
                cand = w[r] + a
                if cand < w[nxt]:
                    w[nxt] = cand
                r = nxt


def min_lengths(coins, Py_ssize_t upto):
    cdef list sc = sorted(coins)
    cdef Py_ssize_t k = len(sc)
    cdef int64_t[::1] cs
    cdef Py_ssize_t x, j, c
    cdef int64_t lo, prev
    import numpy as np
    arr = np.full(upto + 1, -1, dtype=np.int64)
    cdef int64_t[::1] best = arr
    cs = np.asarray(sc, dtype=np.int64)
    best[0] = 0
    with nogil:
        for x in range(1, upto + 1):
            lo = -1
            for j in range(k):
                c = cs[j]
                if c > x:
                    break
                prev = best[x - c]
                if prev >= 0 and (lo < 0 or prev + 1 < lo):
                    lo = prev + 1
            best[x] = lo
    return arr


def maximal_classes(const int64_t[::1] w, gens):
    cdef Py_ssize_t m = w.shape[0]
    cdef Py_ssize_t k = len(gens)
    cdef Py_ssize_t c, j
    cdef int64_t x, g
    cdef bint ok
    import numpy as np
    gs_arr = np.asarray(list(gens), dtype=np.int64)
    cdef int64_t[::1] gs = gs_arr
    cdef list out = []
    for c in range(m):
        x = w[c]
        if x < 0:
            continue
        ok = True
        for j in range(k):
            g = gs[j]
            if w[(c + g) % m] == x + g:
                ok = False
                break
        if ok:
            out.append(c)
    return out


cdef inline bint _member(const int64_t[::1] w, Py_ssize_t m, int64_t x) nogil:
    cdef int64_t e
    if x < 0:
        return False
    e = w[x % m]
    return 0 <= e <= x


def trace_holes(const int64_t[::1] w, pf, int64_t frobenius):
    cdef Py_ssize_t m = w.shape[0]
    cdef Py_ssize_t t = len(pf)
    cdef Py_ssize_t a, b
    cdef int64_t h, base
    cdef bint found, ok
    import numpy as np
    pf_arr = np.asarray(list(pf), dtype=np.int64)
    cdef int64_t[::1] fs = pf_arr
    cdef list holes = []
    for h in range(frobenius + 1):
        if not _member(w, m, h):
            continue
        found = False
        for a in range(t):
            base = h + fs[a]
            ok = True
            for b in range(t):
                if not _member(w, m, base - fs[b]):
                    ok = False
                    break
            if ok:
                found = True
                break
        if not found:
            holes.append(h)
    return holes
