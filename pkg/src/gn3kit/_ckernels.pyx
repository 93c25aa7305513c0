# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_kernels_py``; identical signatures and results."""

from libc.stdlib cimport malloc, free

BACKEND = "cython"


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _popcount(unsigned long long x) nogil:
    return __builtin_popcountll(x)


cdef inline int _omitted(unsigned long long u, unsigned long long m) nogil:
    return __builtin_ctzll(u & ~m)


def occurrence_indices(codes, watch):
    cdef Py_ssize_t n = len(codes)
    cdef Py_ssize_t nw = len(watch)
    cdef Py_ssize_t L = nw // 4
    cdef Py_ssize_t p, t
    cdef int c, size = 1
    cdef int *cc = <int *> malloc((n + 1) * sizeof(int))
    cdef int *ww = <int *> malloc((nw + 1) * sizeof(int))
    cdef unsigned char *par
    cdef bytearray row
    out = []
    try:
        for p in range(n):
            cc[p] = codes[p]
            if cc[p] + 1 > size:
                size = cc[p] + 1
        for t in range(nw):
            ww[t] = watch[t]
            if ww[t] + 1 > size:
                size = ww[t] + 1
        par = <unsigned char *> malloc(size)
        try:
            for t in range(size):
                par[t] = 0
            for p in range(n):
                c = cc[p]
                if c == 0:
                    row = bytearray(L)
                    for t in range(L):
                        row[t] = 2 * (par[ww[4 * t]] ^ par[ww[4 * t + 1]]) + (
                            par[ww[4 * t + 2]] ^ par[ww[4 * t + 3]])
                    out.append((p, bytes(row)))
                elif c > 0:
                    par[c] ^= 1
        finally:
            free(par)
    finally:
        free(cc)
        free(ww)
    return out


def reduce_involutions(seq):
    cdef list stack = []
    cdef Py_ssize_t top
    for x in seq:
        top = len(stack)
        if top and stack[top - 1] == x:
            stack.pop()
        else:
            stack.append(x)
    return stack


cpdef list gn3_successors(word, alphabet, bint insertions):
    cdef tuple w = tuple(word)
    cdef Py_ssize_t n = len(w)
    cdef Py_ssize_t p
    cdef unsigned long long x, y, a0, a1, a2, a3, u
    cdef int d
    cdef list out = []
    cdef unsigned long long *buf = <unsigned long long *> malloc((n + 1) * sizeof(unsigned long long))
    try:
        for p in range(n):
            buf[p] = w[p]
        for p in range(n + 1):
            if p + 1 < n and buf[p] == buf[p + 1]:
                out.append((p, 1, 1, w[:p] + w[p + 2:]))
            if insertions:
                for z in alphabet:
                    out.append((p, 1, -1, w[:p] + (z, z) + w[p:]))
            if p + 1 < n:
                x = buf[p]
                y = buf[p + 1]
                if _popcount(x & y) < 2:
                    out.append((p, 2, 1 if x < y else -1, w[:p] + (w[p + 1], w[p]) + w[p + 2:]))
            if p + 3 < n:
                a0 = buf[p]
                a1 = buf[p + 1]
                a2 = buf[p + 2]
                a3 = buf[p + 3]
                u = a0 | a1 | a2 | a3
                if (_popcount(u) == 4 and a0 != a1 and a0 != a2 and a0 != a3
                        and a1 != a2 and a1 != a3 and a2 != a3):
                    d = 1 if _omitted(u, a0) > _omitted(u, a3) else -1
                    out.append((p, 3, d, w[:p] + (w[p + 3], w[p + 2], w[p + 1], w[p]) + w[p + 4:]))
    finally:
        free(buf)
    return out


def gn3_bfs(start, goal, alphabet, bint insertions, Py_ssize_t max_length,
            Py_ssize_t max_states, Py_ssize_t max_depth):
    cdef tuple s = tuple(start)
    cdef tuple g = tuple(goal)
    cdef dict parents = {s: None}
    cdef list frontier, nxt
    cdef Py_ssize_t depth = 0
    cdef bint truncated = False, ins
    cdef tuple w, res
    if s == g:
        return True, parents, 1, 0, False
    alphabet = tuple(alphabet)
    frontier = [s]
    while frontier and depth < max_depth:
        depth += 1
        nxt = []
        for w in frontier:
            ins = insertions and len(w) <= max_length - 2
            for pos, rule, d, res in gn3_successors(w, alphabet, ins):
                if len(res) > max_length or res in parents:
                    continue
                if len(parents) >= max_states:
                    truncated = True
                    continue
                parents[res] = (w, pos, rule, d)
                if res == g:
                    return True, parents, len(parents), depth, truncated
                nxt.append(res)
        frontier = nxt
    if frontier and depth >= max_depth:
        truncated = True
    # deepest level that actually holds a state
    reached = depth if frontier else max(depth - 1, 0)
    return False, parents, len(parents), reached, truncated
