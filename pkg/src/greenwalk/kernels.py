"""Kernel dispatch: the compiled extension when it is importable, else pure Python.

Set ``GREENWALK_PURE=1`` to force the fallback. The compiled DFS works in
int64 with a magnitude guard; on overflow it defers to the exact fallback.
"""

from __future__ import annotations

import os

from . import _fallback

BACKEND = "python"
_compiled = None

if os.environ.get("GREENWALK_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:  # extension not built
        _compiled = None


def subset_left_perps(perp, nbits):
    if _compiled is not None:
        try:
            return _compiled.subset_left_perps(list(perp), nbits)
        except OverflowError:
            pass
    return _fallback.subset_left_perps(perp, nbits)


def cover_edges(masks):
    if _compiled is not None and max(masks, default=0).bit_length() <= 64:
        return _compiled.cover_edges(list(masks))
    return _fallback.cover_edges(masks)


def green_dfs(b, max_len, limit):
    if _compiled is not None:
        try:
            return _compiled.green_dfs([list(r) for r in b], max_len, limit)
        except OverflowError:
            pass
    return _fallback.green_dfs(b, max_len, limit)
