# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of :mod:`bmwskein._skein_py` (same input and output)."""

from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memcpy

DEF MAXC = 48
DEF MAXB = 32
DEF MAXL = 256

cdef struct State:
    int ncr
    int nbd
    int loops
    int ae
    int ze
    long long coef
    int cr[4 * MAXC]
    int bd[MAXB]


cdef inline int _join(State* s, int x, int y) noexcept nogil:
    cdef int k
    if x == y:
        return 1
    for k in range(4 * s.ncr):
        if s.cr[k] == y:
            s.cr[k] = x
    for k in range(s.nbd):
        if s.bd[k] == y:
            s.bd[k] = x
    return 0


cdef inline void _delete(State* s, int i) noexcept nogil:
    cdef int k
    for k in range(4 * i, 4 * (s.ncr - 1)):
        s.cr[k] = s.cr[k + 4]
    s.ncr -= 1


cdef void _remove_kinks(State* s) noexcept nogil:
    cdef int i, a, b, c, d, sign, x, y
    cdef bint changed = True
    while changed:
        changed = False
        for i in range(s.ncr):
            a = s.cr[4 * i]
            b = s.cr[4 * i + 1]
            c = s.cr[4 * i + 2]
            d = s.cr[4 * i + 3]
            if a == b:
                sign = 1; x = c; y = d
            elif c == d:
                sign = 1; x = a; y = b
            elif b == c:
                sign = -1; x = d; y = a
            elif d == a:
                sign = -1; x = b; y = c
            else:
                continue
            _delete(s, i)
            s.ae += sign
            s.loops += _join(s, x, y)
            changed = True
            break


cdef int _walk(State* s, int* matching, int* writhe, int* closed) noexcept nogil:
    """-1 when descending (fills outputs), else the index of a bad crossing."""
    cdef int occ0[MAXL]
    cdef int occ1[MAXL]
    cdef int seen[MAXC]
    cdef int comp[2 * MAXC]
    cdef int enter[2 * MAXC]
    cdef int p, i, k, lab, pos, nxt, over, out, ncomp, i0, start, u, o
    for k in range(MAXL):
        occ0[k] = -100000
        occ1[k] = -100000
    for p in range(s.nbd):
        lab = s.bd[p]
        if occ0[lab] == -100000:
            occ0[lab] = -1 - p
        else:
            occ1[lab] = -1 - p
    for k in range(4 * s.ncr):
        lab = s.cr[k]
        if occ0[lab] == -100000:
            occ0[lab] = k
        else:
            occ1[lab] = k
    for i in range(s.ncr):
        seen[i] = 0
        comp[2 * i] = -1
        comp[2 * i + 1] = -1
        enter[2 * i] = -1
        enter[2 * i + 1] = -1
    for p in range(s.nbd):
        matching[p] = -1
    ncomp = 0
    for p in range(s.nbd):
        if matching[p] >= 0:
            continue
        pos = -1 - p
        lab = s.bd[p]
        while True:
            nxt = occ1[lab] if occ0[lab] == pos else occ0[lab]
            if nxt < 0:
                matching[p] = -1 - nxt
                matching[-1 - nxt] = p
                break
            i = nxt >> 2
            k = nxt & 3
            over = k & 1
            if seen[i] == 0 and not over:
                return i
            seen[i] += 1
            comp[2 * i + over] = ncomp
            enter[2 * i + over] = k
            out = (k + 2) & 3
            pos = 4 * i + out
            lab = s.cr[pos]
        ncomp += 1
    closed[0] = 0
    for i0 in range(s.ncr):
        if seen[i0] == 2:
            continue
        if comp[2 * i0 + 1] < 0:
            start = 4 * i0 + 1
        else:
            start = 4 * i0
        i = i0
        k = start & 3
        while True:
            over = k & 1
            if seen[i] == 0 and not over:
                return i
            seen[i] += 1
            comp[2 * i + over] = ncomp
            enter[2 * i + over] = k
            out = (k + 2) & 3
            pos = 4 * i + out
            lab = s.cr[pos]
            nxt = occ1[lab] if occ0[lab] == pos else occ0[lab]
            if nxt == start:
                break
            i = nxt >> 2
            k = nxt & 3
        ncomp += 1
        closed[0] += 1
    writhe[0] = 0
    for i in range(s.ncr):
        if comp[2 * i] == comp[2 * i + 1]:
            u = enter[2 * i]
            o = enter[2 * i + 1]
            if (u == 0 and o == 3) or (u == 2 and o == 1):
                writhe[0] += 1
            else:
                writhe[0] -= 1
    return -1


def resolve(crossings, boundary, int loops=0):
    cdef int ncr = len(crossings)
    cdef int nbd = len(boundary)
    if ncr > MAXC or nbd > MAXB:
        from ._skein_py import resolve as slow
        return slow(crossings, boundary, loops)
    remap = {}
    for item in boundary:
        if item not in remap:
            remap[item] = len(remap)
    for quad in crossings:
        for item in quad:
            if item not in remap:
                remap[item] = len(remap)
    if len(remap) > MAXL:
        from ._skein_py import resolve as slow
        return slow(crossings, boundary, loops)

    cdef int cap = 64
    cdef int top = 0
    cdef State* stack = <State*>malloc(cap * sizeof(State))
    cdef State* s
    cdef State* t
    cdef int i, j, k, a, b, c, d, bad, wr, closed, x, y
    cdef int matching[MAXB]
    if stack == NULL:
        raise MemoryError()
    s = &stack[0]
    s.ncr = ncr
    s.nbd = nbd
    s.loops = loops
    s.ae = 0
    s.ze = 0
    s.coef = 1
    for i in range(ncr):
        for k in range(4):
            s.cr[4 * i + k] = remap[crossings[i][k]]
    for i in range(nbd):
        s.bd[i] = remap[boundary[i]]
    top = 1
    out = {}
    try:
        while top > 0:
            if top + 3 > cap:
                cap *= 2
                stack = <State*>realloc(stack, cap * sizeof(State))
                if stack == NULL:
                    raise MemoryError()
            top -= 1
            s = &stack[top]
            _remove_kinks(s)
            bad = _walk(s, matching, &wr, &closed)
            if bad < 0:
                m = tuple([matching[i] for i in range(s.nbd)])
                key = (s.ae + wr, s.ze, s.loops + closed)
                bucket = out.get(m)
                if bucket is None:
                    bucket = {}
                    out[m] = bucket
                val = bucket.get(key, 0) + s.coef
                if val:
                    bucket[key] = val
                else:
                    del bucket[key]
                continue
            a = s.cr[4 * bad]
            b = s.cr[4 * bad + 1]
            c = s.cr[4 * bad + 2]
            d = s.cr[4 * bad + 3]
            # the current slot becomes the switched crossing; two smoothings go on top
            t = &stack[top + 1]
            memcpy(t, s, sizeof(State))
            _delete(t, bad)
            t.ze += 1
            t.loops += _join(t, a, b)
            x = a if c == b else c
            y = a if d == b else d
            t.loops += _join(t, x, y)
            t = &stack[top + 2]
            memcpy(t, s, sizeof(State))
            _delete(t, bad)
            t.ze += 1
            t.coef = -t.coef
            t.loops += _join(t, a, d)
            x = a if b == d else b
            y = a if c == d else c
            t.loops += _join(t, x, y)
            s.cr[4 * bad] = b
            s.cr[4 * bad + 1] = c
            s.cr[4 * bad + 2] = d
            s.cr[4 * bad + 3] = a
            top += 3
    finally:
        free(stack)
    return {m: bk for m, bk in out.items() if bk}
