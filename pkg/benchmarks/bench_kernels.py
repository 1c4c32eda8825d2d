"""Compiled kernels vs the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each workload is run through both backends; outputs are compared before timing.
"""

import argparse
import timeit

from greenwalk import _fallback
from greenwalk.cluster import Quiver, exchange_matrix
from greenwalk.repkit.lattice import hom_table
from greenwalk.repkit.typea import TypeAQuiver

try:
    from greenwalk import _kernels
except ImportError:
    _kernels = None


def workloads():
    out = []
    for spec in ("1>2,2>3,3>4", "1>2,2<3,3>4,4<5"):
        table = hom_table(TypeAQuiver.parse(spec))
        perp, nbits = list(table.lperp), len(table.mods)
        out.append((f"subset_left_perps {spec}", "subset_left_perps", (perp, nbits)))
        masks = _fallback.subset_left_perps(perp, nbits)
        out.append((f"cover_edges {spec} ({len(masks)} classes)", "cover_edges", (masks,)))
    for name, q in (
        ("A4 linear", Quiver.linear_a(4)),
        ("A5 linear", Quiver.linear_a(5)),
        ("D4 star", Quiver(4, ((1, 2), (1, 3), (1, 4)))),
    ):
        b = [list(r) for r in exchange_matrix(q)]
        out.append((f"green_dfs {name}", "green_dfs", (b, 64, 10**6)))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled extension not built; only the fallback is available")
    print(f"{'workload':<44} {'python (ms)':>12} {'cython (ms)':>12} {'speedup':>8}")
    for label, fn, fargs in workloads():
        py = getattr(_fallback, fn)
        t_py = min(timeit.repeat(lambda: py(*fargs), number=1, repeat=args.repeat)) * 1e3
        if _kernels is None:
            print(f"{label:<44} {t_py:>12.2f} {'-':>12} {'-':>8}")
            continue
        cy = getattr(_kernels, fn)
        assert cy(*fargs) == py(*fargs), label
        t_cy = min(timeit.repeat(lambda: cy(*fargs), number=1, repeat=args.repeat)) * 1e3
        print(f"{label:<44} {t_py:>12.2f} {t_cy:>12.2f} {t_py / t_cy:>7.1f}x")


if __name__ == "__main__":
    main()
