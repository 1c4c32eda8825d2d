# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels. Contracts match ``greenwalk._fallback`` exactly."""

from libc.stdlib cimport malloc, free, qsort
from libc.stdint cimport uint64_t, int64_t

# entries beyond this magnitude could overflow int64 in one mutation step
cdef int64_t _LIMIT = 1LL << 30


cdef int _cmp_u64(const void *a, const void *b) noexcept nogil:
    cdef uint64_t x = (<uint64_t *>a)[0]
    cdef uint64_t y = (<uint64_t *>b)[0]
    return (x > y) - (x < y)


def subset_left_perps(perp, int nbits):
    cdef int m = len(perp)
    if nbits > 64 or m > 26:
        raise OverflowError("subset sweep too large for the compiled kernel")
    cdef uint64_t full = (<uint64_t>-1) if nbits == 64 else ((<uint64_t>1 << nbits) - 1)
    cdef Py_ssize_t size = (<Py_ssize_t>1) << m
    cdef uint64_t *lp = <uint64_t *>malloc(size * sizeof(uint64_t))
    cdef uint64_t *pp = <uint64_t *>malloc((m + 1) * sizeof(uint64_t))
    cdef Py_ssize_t s, low, t, uniq
    cdef int bit
    if lp == NULL or pp == NULL:
        free(lp)
        free(pp)
        raise MemoryError()
    try:
        for t in range(m):
            pp[t] = <uint64_t>perp[t]
        with nogil:
            lp[0] = full
            for s in range(1, size):
                low = s & -s
                bit = 0
                while (low >> bit) != 1:
                    bit += 1
                lp[s] = lp[s ^ low] & pp[bit]
            qsort(lp, size, sizeof(uint64_t), _cmp_u64)
            uniq = 0
            for s in range(size):
                if uniq == 0 or lp[s] != lp[uniq - 1]:
                    lp[uniq] = lp[s]
                    uniq += 1
        out = [lp[s] for s in range(uniq)]
    finally:
        free(lp)
        free(pp)
    out.sort(key=lambda v: (bin(v).count("1"), v))
    return out


def cover_edges(masks):
    cdef Py_ssize_t c = len(masks)
    cdef uint64_t *mk = <uint64_t *>malloc((c + 1) * sizeof(uint64_t))
    cdef Py_ssize_t i, j, k
    cdef uint64_t mi, mj, mm
    cdef bint covered
    if mk == NULL:
        raise MemoryError()
    edges = []
    try:
        for i in range(c):
            mk[i] = <uint64_t>masks[i]
        for i in range(c):
            mi = mk[i]
            for j in range(i + 1, c):
                mj = mk[j]
                if (mi & ~mj) != 0 or mi == mj:
                    continue
                covered = True
                for k in range(i + 1, c):
                    mm = mk[k]
                    if k != j and (mi & ~mm) == 0 and mi != mm and (mm & ~mj) == 0 and mm != mj:
                        covered = False
                        break
                if covered:
                    edges.append((i, j))
    finally:
        free(mk)
    return edges


cdef inline int64_t _chk(int64_t x) except? -1:
    if x > _LIMIT or x < -_LIMIT:
        raise OverflowError("c-matrix entry too large for the compiled kernel")
    return x


cdef int _greens(int64_t *c, int n, int *out) noexcept nogil:
    cdef int k, i, cnt = 0
    cdef bint pos, ok
    cdef int64_t x
    for k in range(n):
        pos = False
        ok = True
        for i in range(n):
            x = c[i * n + k]
            if x < 0:
                ok = False
                break
            if x > 0:
                pos = True
        if ok and pos:
            out[cnt] = k
            cnt += 1
    return cnt


cdef int _mutate(int64_t *b, int64_t *c, int64_t *nb, int64_t *nc, int n, int k) except -1:
    cdef int i, j
    cdef int64_t bik, p, cik
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                nb[i * n + j] = -b[i * n + j]
            else:
                bik = b[i * n + k]
                p = bik * b[k * n + j]
                if p > 0:
                    nb[i * n + j] = _chk(b[i * n + j] + (p if bik > 0 else -p))
                else:
                    nb[i * n + j] = b[i * n + j]
    for i in range(n):
        cik = c[i * n + k]
        for j in range(n):
            if j == k:
                nc[i * n + j] = -c[i * n + j]
            elif cik > 0 and b[k * n + j] > 0:
                nc[i * n + j] = _chk(c[i * n + j] + cik * b[k * n + j])
            elif cik < 0 and b[k * n + j] < 0:
                nc[i * n + j] = _chk(c[i * n + j] - cik * b[k * n + j])
            else:
                nc[i * n + j] = c[i * n + j]
    return 0


def green_dfs(b, int max_len, int limit):
    cdef int n = len(b)
    cdef int nn = n * n
    cdef int depth_cap = max_len + 1
    cdef int64_t *bs = <int64_t *>malloc(depth_cap * nn * sizeof(int64_t))
    cdef int64_t *cs = <int64_t *>malloc(depth_cap * nn * sizeof(int64_t))
    cdef int *cand = <int *>malloc(depth_cap * (n + 1) * sizeof(int))
    cdef int *ncand = <int *>malloc(depth_cap * sizeof(int))
    cdef int *pos = <int *>malloc(depth_cap * sizeof(int))
    cdef int *steps = <int *>malloc(depth_cap * sizeof(int))
    cdef int *tmp = <int *>malloc((n + 1) * sizeof(int))
    cdef int i, j, d, k, g
    if not (bs and cs and cand and ncand and pos and steps and tmp):
        free(bs)
        free(cs)
        free(cand)
        free(ncand)
        free(pos)
        free(steps)
        free(tmp)
        raise MemoryError()
    walks = []
    overlong = []
    truncated = False
    try:
        for i in range(n):
            for j in range(n):
                bs[i * n + j] = _chk(<int64_t>b[i][j])
                cs[i * n + j] = 1 if i == j else 0
        ncand[0] = _greens(cs, n, cand)
        pos[0] = 0
        d = 0
        while d >= 0:
            if pos[d] >= ncand[d]:
                d -= 1
                continue
            k = cand[d * (n + 1) + pos[d]]
            pos[d] += 1
            steps[d] = k + 1
            _mutate(bs + d * nn, cs + d * nn, bs + (d + 1) * nn, cs + (d + 1) * nn, n, k)
            g = _greens(cs + (d + 1) * nn, n, tmp)
            if g == 0:
                if len(walks) >= limit:
                    truncated = True
                    break
                walks.append(tuple(steps[i] for i in range(d + 1)))
            elif d + 1 >= max_len:
                overlong.append(tuple(steps[i] for i in range(d + 1)))
            else:
                d += 1
                for i in range(g):
                    cand[d * (n + 1) + i] = tmp[i]
                ncand[d] = g
                pos[d] = 0
    finally:
        free(bs)
        free(cs)
        free(cand)
        free(ncand)
        free(pos)
        free(steps)
        free(tmp)
    return walks, overlong, truncated
