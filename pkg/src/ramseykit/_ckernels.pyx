# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels.  Same contracts as ``_pykernels``."""

from libc.stdint cimport uint32_t
from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memcmp, memcpy

cdef enum:
    MAXP = 32


cdef int _grow(unsigned char **orders, uint32_t **used, Py_ssize_t *cap, int p) except -1:
    cdef Py_ssize_t ncap = cap[0] * 2 if cap[0] else 64
    cdef unsigned char *o = <unsigned char *> realloc(orders[0], ncap * p)
    if o == NULL:
        raise MemoryError()
    orders[0] = o
    cdef uint32_t *u = <uint32_t *> realloc(used[0], ncap * sizeof(uint32_t))
    if u == NULL:
        raise MemoryError()
    used[0] = u
    cap[0] = ncap
    return 0


def canonical_form(bytes tri, int p):
    if p <= 1:
        return bytes(tri), list(range(p))
    if p > MAXP:
        raise ValueError("compiled canonical form supports p <= 32")
    cdef const unsigned char *t = tri
    cdef unsigned char m[MAXP * MAXP]
    cdef int rep[MAXP]
    cdef unsigned char best[MAXP]
    cdef unsigned char row[MAXP]
    cdef int u, v, w, x, y, k, e, r, cmp, have_best, same
    cdef Py_ssize_t idx = 0
    for v in range(p):
        m[v * p + v] = 0
        for u in range(v):
            m[u * p + v] = t[idx]
            m[v * p + u] = t[idx]
            idx += 1

    for w in range(p):
        rep[w] = w
    for w in range(p):
        if rep[w] != w:
            continue
        for x in range(w + 1, p):
            if rep[x] != x:
                continue
            same = 1
            for y in range(p):
                if y != w and y != x and m[w * p + y] != m[x * p + y]:
                    same = 0
                    break
            if same:
                rep[x] = w

    cdef unsigned char *cur_o = NULL
    cdef uint32_t *cur_u = NULL
    cdef Py_ssize_t cur_n = 0, cur_cap = 0
    cdef unsigned char *nxt_o = NULL
    cdef uint32_t *nxt_u = NULL
    cdef Py_ssize_t nxt_n = 0, nxt_cap = 0
    cdef unsigned char *swap_o
    cdef uint32_t *swap_u
    cdef Py_ssize_t swap_cap
    cdef uint32_t seen, used_e
    out = bytearray()
    try:
        _grow(&cur_o, &cur_u, &cur_cap, p)
        cur_n = 1
        cur_u[0] = 0
        for k in range(p):
            have_best = 0
            nxt_n = 0
            for e in range(cur_n):
                used_e = cur_u[e]
                seen = 0
                for x in range(p):
                    if (used_e >> x) & 1:
                        continue
                    r = rep[x]
                    if (seen >> r) & 1:
                        continue
                    seen |= (<uint32_t> 1) << r
                    for y in range(k):
                        row[y] = m[x * p + cur_o[e * p + y]]
                    if have_best:
                        cmp = memcmp(row, best, k)
                    else:
                        cmp = -1
                    if cmp > 0:
                        continue
                    if cmp < 0:
                        memcpy(best, row, k)
                        have_best = 1
                        nxt_n = 0
                    if nxt_n == nxt_cap:
                        _grow(&nxt_o, &nxt_u, &nxt_cap, p)
                    memcpy(nxt_o + nxt_n * p, cur_o + e * p, k)
                    nxt_o[nxt_n * p + k] = <unsigned char> x
                    nxt_u[nxt_n] = used_e | ((<uint32_t> 1) << x)
                    nxt_n += 1
            out += best[:k]
            swap_o = cur_o; cur_o = nxt_o; nxt_o = swap_o
            swap_u = cur_u; cur_u = nxt_u; nxt_u = swap_u
            swap_cap = cur_cap; cur_cap = nxt_cap; nxt_cap = swap_cap
            cur_n = nxt_n
        order = [cur_o[y] for y in range(p)]
    finally:
        free(cur_o)
        free(cur_u)
        free(nxt_o)
        free(nxt_u)
    return bytes(out), order
