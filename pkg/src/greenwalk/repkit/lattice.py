"""Torsion classes of a type-A path algebra, their lattice, and the
CFHO <-> maximal green sequence converters.

Torsion classes are stored as bitmasks over ``indecomposables(q)``: bit ``t``
is set when the ``t``-th interval belongs to the class.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .. import kernels
from .typea import (
    ThinModule,
    TypeAQuiver,
    check_bound,
    components,
    hom_dim,
    indecomposables,
    submodules_of_support,
)

__all__ = [
    "TorsionClassSet",
    "TorsionLattice",
    "HomTable",
    "hom_table",
    "left_perp",
    "right_perp",
    "filt_generated",
    "torsion_lattice",
    "maximal_chains",
    "cfho_from_chain",
    "mgs_from_cfho",
    "verify_cfho",
    "CFHOCheck",
    "lattice_to_json",
    "lattice_to_dot",
]


@dataclass(frozen=True)
class HomTable:
    """``dim Hom`` between all indecomposables, with the derived perp bitmasks."""

    quiver: TypeAQuiver
    mods: Tuple[ThinModule, ...]
    dims: Tuple[Tuple[int, ...], ...]
    lperp: Tuple[int, ...]  # lperp[s]: bits X with Hom(X, mods[s]) = 0
    rperp: Tuple[int, ...]  # rperp[s]: bits Y with Hom(mods[s], Y) = 0

    def index(self, m: ThinModule) -> int:
        return self.mods.index(m)

    @property
    def full(self) -> int:
        return (1 << len(self.mods)) - 1


@lru_cache(maxsize=None)
def hom_table(q: TypeAQuiver) -> HomTable:
    mods = indecomposables(q)
    dims = tuple(tuple(hom_dim(x, y) for y in mods) for x in mods)
    nm = len(mods)
    lperp = tuple(sum(1 << x for x in range(nm) if dims[x][s] == 0) for s in range(nm))
    rperp = tuple(sum(1 << y for y in range(nm) if dims[s][y] == 0) for s in range(nm))
    return HomTable(q, mods, dims, lperp, rperp)


def _bits(mask: int) -> List[int]:
    out, t = [], 0
    while mask:
        if mask & 1:
            out.append(t)
        mask >>= 1
        t += 1
    return out


def _mask(table: HomTable, mods: Iterable[ThinModule]) -> int:
    return sum(1 << table.index(m) for m in set(mods))


def _lperp_mask(table: HomTable, mask: int) -> int:
    out = table.full
    for s in _bits(mask):
        out &= table.lperp[s]
    return out


def _rperp_mask(table: HomTable, mask: int) -> int:
    out = table.full
    for s in _bits(mask):
        out &= table.rperp[s]
    return out


def left_perp(s: Iterable[ThinModule], q: TypeAQuiver = None) -> FrozenSet[ThinModule]:
    """Indecomposables ``X`` with ``Hom(X, s) = 0`` for every ``s``."""
    s = list(s)
    q = q or (s[0].quiver if s else None)
    if q is None:
        raise ValueError("left_perp of an empty set needs the quiver")
    table = hom_table(q)
    return frozenset(table.mods[t] for t in _bits(_lperp_mask(table, _mask(table, s))))


def right_perp(s: Iterable[ThinModule], q: TypeAQuiver = None) -> FrozenSet[ThinModule]:
    s = list(s)
    q = q or (s[0].quiver if s else None)
    if q is None:
        raise ValueError("right_perp of an empty set needs the quiver")
    table = hom_table(q)
    return frozenset(table.mods[t] for t in _bits(_rperp_mask(table, _mask(table, s))))


@dataclass(frozen=True)
class TorsionClassSet:
    quiver: TypeAQuiver
    members: FrozenSet[int]

    @classmethod
    def from_mask(cls, q: TypeAQuiver, mask: int) -> "TorsionClassSet":
        return cls(q, frozenset(_bits(mask)))

    @property
    def mask(self) -> int:
        return sum(1 << t for t in self.members)

    @property
    def modules(self) -> Tuple[ThinModule, ...]:
        mods = indecomposables(self.quiver)
        return tuple(mods[t] for t in sorted(self.members))

    def __contains__(self, m: ThinModule) -> bool:
        return indecomposables(self.quiver).index(m) in self.members

    def contains_support(self, support: Iterable[int]) -> bool:
        """Whether the thin module with this support (a direct sum of intervals) lies in the class."""
        mods = indecomposables(self.quiver)
        return all(mods.index(ThinModule(self.quiver, a, b)) in self.members for a, b in components(support))

    def is_fixed_point(self) -> bool:
        table = hom_table(self.quiver)
        return _lperp_mask(table, _rperp_mask(table, self.mask)) == self.mask

    def is_factor_closed(self) -> bool:
        q = self.quiver
        for m in self.modules:
            for sub in submodules_of_support(q, m.support):
                if not self.contains_support(m.support - sub) and sub != m.support:
                    return False
        return True

    def __str__(self) -> str:
        return "{" + ", ".join(str(m) for m in self.modules) + "}"


@dataclass(frozen=True)
class TorsionLattice:
    quiver: TypeAQuiver
    classes: Tuple[TorsionClassSet, ...]
    hasse: Tuple[Tuple[int, int], ...]
    labels: Dict[Tuple[int, int], ThinModule] = field(hash=False, compare=False)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.classes) - 1

    def index_of(self, t: TorsionClassSet) -> int:
        return self._index[t.mask]

    @property
    def _index(self) -> Dict[int, int]:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {c.mask: i for i, c in enumerate(self.classes)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def covers(self, i: int) -> List[int]:
        return [j for a, j in self.hasse if a == i]


def proper_factor_supports(m: ThinModule) -> List[FrozenSet[int]]:
    """Supports of ``m / U`` for every nonzero proper submodule ``U``."""
    return [m.support - u for u in submodules_of_support(m.quiver, m.support) if u and u != m.support]


def _edge_label(table: HomTable, lower: TorsionClassSet, upper: TorsionClassSet) -> ThinModule:
    """The unique brick ``N`` in ``upper \\ lower`` with ``Hom(lower, N) = 0`` and
    every proper factor of ``N`` in ``lower``."""
    found = []
    for t in sorted(upper.members - lower.members):
        n = table.mods[t]
        if any(table.dims[s][t] for s in lower.members):
            continue
        if all(lower.contains_support(f) for f in proper_factor_supports(n)):
            found.append(n)
    if len(found) != 1:
        raise AssertionError(f"cover {lower} < {upper} has {len(found)} minimal extending bricks: {found}")
    return found[0]


@lru_cache(maxsize=None)
def _torsion_lattice(q: TypeAQuiver) -> TorsionLattice:
    table = hom_table(q)
    masks = kernels.subset_left_perps(table.lperp, len(table.mods))
    classes = tuple(TorsionClassSet.from_mask(q, m) for m in masks)
    hasse = tuple(sorted(kernels.cover_edges(masks)))
    labels = {(i, j): _edge_label(table, classes[i], classes[j]) for i, j in hasse}
    return TorsionLattice(q, classes, hasse, labels)


def torsion_lattice(q: TypeAQuiver, bound: int = None) -> TorsionLattice:
    """All torsion classes as left perps of subsets of indecomposables, with brick-labelled covers."""
    check_bound(q.n, bound)
    return _torsion_lattice(q)


def maximal_chains(lat: TorsionLattice, limit: int = None) -> List[Tuple[int, ...]]:
    """Cover chains from bottom to top, as tuples of class indices, lexicographic."""
    out: List[Tuple[int, ...]] = []
    succ = {i: sorted(lat.covers(i)) for i in range(len(lat.classes))}
    stack = [(lat.bottom,)]
    while stack:
        path = stack.pop()
        last = path[-1]
        if last == lat.top:
            out.append(path)
            if limit is not None and len(out) >= limit:
                break
            continue
        for j in reversed(succ[last]):
            stack.append(path + (j,))
    return out


def _chain_indices(lat: TorsionLattice, chain) -> Tuple[int, ...]:
    return tuple(c if isinstance(c, int) else lat.index_of(c) for c in chain)


def cfho_from_chain(lat: TorsionLattice, chain) -> Tuple[ThinModule, ...]:
    """Edge labels ``N_1..N_m`` along a maximal chain (indices or TorsionClassSets)."""
    idx = _chain_indices(lat, chain)
    if not idx or idx[0] != lat.bottom or idx[-1] != lat.top:
        raise ValueError("chain must run from the zero class to the whole category")
    edges = set(lat.hasse)
    for a, b in zip(idx, idx[1:]):
        if (a, b) not in edges:
            raise ValueError(f"{lat.classes[a]} -> {lat.classes[b]} is not a cover relation")
    return tuple(lat.labels[(a, b)] for a, b in zip(idx, idx[1:]))


def mgs_from_cfho(mods: Sequence[ThinModule], lat: TorsionLattice = None) -> Tuple[TorsionClassSet, ...]:
    """``T_i = left_perp(N_{i+1}, ..., N_m)`` for ``i = 0..m``."""
    if not mods:
        raise ValueError("empty sequence")
    q = mods[0].quiver
    check = verify_cfho(mods)
    if not check.ok:
        raise ValueError(f"not a CFHO sequence: {'; '.join(check.diagnostics)}")
    table = hom_table(q)
    chain = []
    for i in range(len(mods) + 1):
        chain.append(TorsionClassSet.from_mask(q, _lperp_mask(table, _mask(table, mods[i:]))))
    lat = lat or _torsion_lattice(q)
    idx = [lat.index_of(t) for t in chain]
    edges = set(lat.hasse)
    if any((a, b) not in edges for a, b in zip(idx, idx[1:])):
        raise AssertionError("CFHO produced a chain that is not maximal")
    return tuple(chain)


@dataclass(frozen=True)
class CFHOCheck:
    ok: bool
    diagnostics: Tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def verify_cfho(mods: Sequence[ThinModule]) -> CFHOCheck:
    """Bricks, forward Hom-orthogonality, maximality under insertion,
    ``G(N) = A`` and the per-position completeness condition."""
    if not mods:
        return CFHOCheck(False, ("empty sequence",))
    q = mods[0].quiver
    table = hom_table(q)
    idx = [table.index(m) for m in mods]
    diag = []
    for m, t in zip(mods, idx):
        if table.dims[t][t] != 1:
            diag.append(f"{m} is not a brick")
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if table.dims[idx[i]][idx[j]]:
                diag.append(f"Hom({mods[i]}, {mods[j]}) != 0")
    if not diag:
        for t, x in enumerate(table.mods):
            for p in range(len(idx) + 1):
                if all(table.dims[s][t] == 0 for s in idx[:p]) and all(table.dims[t][s] == 0 for s in idx[p:]):
                    diag.append(f"{x} can be inserted at position {p + 1}")
                    break
    whole = _mask(table, mods)
    gen = _lperp_mask(table, _rperp_mask(table, whole))
    if gen != table.full:
        diag.append("G(N) is not the whole category")
    for k in range(len(idx) + 1):
        left = _mask(table, mods[:k])
        right = _mask(table, mods[k:])
        if gen & _rperp_mask(table, left) & _lperp_mask(table, right):
            diag.append(f"G(N) meets (N_1..N_{k})^perp and perp(N_{k + 1}..N_m)")
    return CFHOCheck(not diag, tuple(diag))


def filt_generated(mods: Sequence[ThinModule], q: TypeAQuiver = None) -> TorsionClassSet:
    """``G(N) = left_perp(right_perp(N))``."""
    q = q or mods[0].quiver
    table = hom_table(q)
    return TorsionClassSet.from_mask(q, _lperp_mask(table, _rperp_mask(table, _mask(table, mods))))


# --- export ---------------------------------------------------------------------------


def lattice_to_json(lat: TorsionLattice) -> dict:
    return {
        "quiver": str(lat.quiver),
        "classes": [[str(m) for m in c.modules] for c in lat.classes],
        "edges": [list(e) for e in lat.hasse],
        "labels": [{"edge": list(e), "brick": str(lat.labels[e]), "dim": list(lat.labels[e].dim)} for e in lat.hasse],
        "maximal_chains": len(maximal_chains(lat)),
    }


def lattice_to_dot(lat: TorsionLattice) -> str:
    lines = ["digraph torsion_lattice {", "  rankdir=BT;", "  node [shape=box, fontsize=10];"]
    for i, c in enumerate(lat.classes):
        label = str(c) if c.members else "0"
        lines.append(f"  t{i} [label={json.dumps(label)}];")
    for i, j in lat.hasse:
        lines.append(f"  t{i} -> t{j} [label={json.dumps(str(lat.labels[(i, j)]))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
