"""Pure-Python implementations of the hot kernels (same contracts as ``_kernels.pyx``)."""

from __future__ import annotations

from typing import List, Sequence, Tuple


def subset_left_perps(perp: Sequence[int], nbits: int) -> List[int]:
    """Distinct values of ``AND_{s in S} perp[s]`` over all subsets ``S``, sorted
    by (popcount, value). The empty subset contributes the all-ones mask."""
    full = (1 << nbits) - 1
    size = 1 << len(perp)
    lp = [0] * size
    lp[0] = full
    for s in range(1, size):
        low = s & -s
        lp[s] = lp[s ^ low] & perp[low.bit_length() - 1]
    return sorted(set(lp), key=lambda m: (bin(m).count("1"), m))


def cover_edges(masks: Sequence[int]) -> List[Tuple[int, int]]:
    """Cover relations of the inclusion order on ``masks`` (sorted by popcount)."""
    edges = []
    for i, mi in enumerate(masks):
        ups = [j for j in range(i + 1, len(masks)) if mi & ~masks[j] == 0 and mi != masks[j]]
        for j in ups:
            mj = masks[j]
            if not any(masks[k] & ~mj == 0 and masks[k] != mj for k in ups if k != j):
                edges.append((i, j))
    return sorted(edges)


def green_dfs(b: Sequence[Sequence[int]], max_len: int, limit: int):
    """Lexicographic DFS over green mutations from ``(B, I)``.

    Returns ``(walks, overlong, truncated)`` with 1-based step tuples.
    """
    n = len(b)
    b0 = [list(r) for r in b]
    c0 = [[int(i == j) for j in range(n)] for i in range(n)]

    def greens(c):
        out = []
        for k in range(n):
            pos = False
            ok = True
            for i in range(n):
                x = c[i][k]
                if x < 0:
                    ok = False
                    break
                if x > 0:
                    pos = True
            if ok and pos:
                out.append(k)
        return out

    def mutate(bm, cm, k):
        nb = [row[:] for row in bm]
        for i in range(n):
            for j in range(n):
                if i == k or j == k:
                    nb[i][j] = -bm[i][j]
                else:
                    bik = bm[i][k]
                    p = bik * bm[k][j]
                    if p > 0:
                        nb[i][j] = bm[i][j] + (p if bik > 0 else -p)
        brow = bm[k]
        nc = []
        for row in cm:
            cik = row[k]
            new = row[:]
            for j in range(n):
                if j == k:
                    new[j] = -row[j]
                elif cik > 0 and brow[j] > 0:
                    new[j] = row[j] + cik * brow[j]
                elif cik < 0 and brow[j] < 0:
                    new[j] = row[j] - cik * brow[j]
            nc.append(new)
        return nb, nc

    walks, overlong = [], []
    steps: List[int] = []
    stack = [(b0, c0, iter(greens(c0)))]
    while stack:
        bm, cm, it = stack[-1]
        k = next(it, None)
        if k is None:
            stack.pop()
            if steps:
                steps.pop()
            continue
        nb, nc = mutate(bm, cm, k)
        g = greens(nc)
        path = tuple(steps) + (k + 1,)
        if not g:
            if len(walks) >= limit:
                return walks, overlong, True
            walks.append(path)
        elif len(path) >= max_len:
            overlong.append(path)
        else:
            steps.append(k + 1)
            stack.append((nb, nc, iter(g)))
    return walks, overlong, False
