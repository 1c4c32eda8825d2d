"""Type-A quivers and their thin representations over the rationals.

A representation uses ``V_i -> V_j`` for an arrow ``i -> j``. A thin module
is given by its support (a vertex set) with identity maps along every arrow
inside the support; its connected components are the interval summands.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from ..cluster import Quiver
from ..errors import BoundExceeded
from ..ratlin import rank

__all__ = [
    "TypeAQuiver",
    "ThinModule",
    "default_bound",
    "check_bound",
    "indecomposables",
    "hom_dim",
    "hom_support",
    "submodules",
    "components",
]


def default_bound() -> int:
    return int(os.environ.get("GREENWALK_MAX_N", "5"))


def check_bound(n: int, bound: int = None) -> None:
    bound = default_bound() if bound is None else bound
    if n > bound:
        raise BoundExceeded(f"oracle rank {n} exceeds bound {bound} (GREENWALK_MAX_N)")


@dataclass(frozen=True)
class TypeAQuiver:
    """Path ``1 - 2 - ... - n``; ``orientation[i]`` is ``'>'`` for ``i+1 -> i+2``, ``'<'`` otherwise."""

    n: int
    orientation: Tuple[str, ...] = ()

    def __post_init__(self):
        orientation = tuple(self.orientation) if self.orientation else (">",) * (self.n - 1)
        object.__setattr__(self, "orientation", orientation)
        if self.n < 1:
            raise ValueError("type A quiver needs n >= 1")
        if len(orientation) != self.n - 1 or any(o not in "<>" for o in orientation):
            raise ValueError(f"bad orientation {orientation!r} for n={self.n}")

    @classmethod
    def parse(cls, spec: str) -> "TypeAQuiver":
        """Parse ``"1>2,2>3,3<4"``; a bare ``"1"`` gives A1."""
        spec = spec.replace(" ", "")
        if spec.isdigit():
            if int(spec) != 1:
                raise ValueError("a bare vertex spec only describes A1")
            return cls(1)
        orientation = []
        for i, part in enumerate(spec.split(","), start=1):
            op = ">" if ">" in part else "<" if "<" in part else None
            if op is None:
                raise ValueError(f"edge {part!r} has no direction")
            a, b = part.split(op)
            if (int(a), int(b)) != (i, i + 1):
                raise ValueError(f"edge {part!r} should join {i} and {i + 1}")
            orientation.append(op)
        return cls(len(orientation) + 1, tuple(orientation))

    @classmethod
    def all_orientations(cls, n: int) -> List["TypeAQuiver"]:
        return [cls(n, o) for o in product("><", repeat=n - 1)]

    def __str__(self) -> str:
        if self.n == 1:
            return "1"
        return ",".join(f"{i}{o}{i + 1}" for i, o in enumerate(self.orientation, start=1))

    @property
    def arrows(self) -> Tuple[Tuple[int, int], ...]:
        return tuple((i, i + 1) if o == ">" else (i + 1, i) for i, o in enumerate(self.orientation, start=1))

    def as_quiver(self) -> Quiver:
        return Quiver(self.n, self.arrows)

    @classmethod
    def from_quiver(cls, q: Quiver):
        """The type-A path structure of ``q`` in the given labelling, or None."""
        if len(q.arrows) != q.n - 1:
            return None
        orientation = []
        for i in range(1, q.n):
            if (i, i + 1) in q.arrows:
                orientation.append(">")
            elif (i + 1, i) in q.arrows:
                orientation.append("<")
            else:
                return None
        return cls(q.n, tuple(orientation))


@dataclass(frozen=True, order=True)
class ThinModule:
    """Interval module ``[a, b]``."""

    quiver: TypeAQuiver
    a: int
    b: int

    def __post_init__(self):
        if not 1 <= self.a <= self.b <= self.quiver.n:
            raise ValueError(f"[{self.a},{self.b}] is not an interval of 1..{self.quiver.n}")

    @property
    def support(self) -> FrozenSet[int]:
        return frozenset(range(self.a, self.b + 1))

    @property
    def dim(self) -> Tuple[int, ...]:
        return tuple(1 if self.a <= v <= self.b else 0 for v in range(1, self.quiver.n + 1))

    @property
    def is_simple(self) -> bool:
        return self.a == self.b

    def __str__(self) -> str:
        return f"{self.a}..{self.b}"

    def __repr__(self) -> str:
        return f"[{self.a},{self.b}]"

    @classmethod
    def from_dim(cls, q: TypeAQuiver, dim: Sequence[int]) -> "ThinModule":
        support = [v for v, x in enumerate(dim, start=1) if x]
        if len(dim) != q.n or any(x not in (0, 1) for x in dim) or not support:
            raise ValueError(f"{tuple(dim)} is not the dimension vector of an interval")
        a, b = support[0], support[-1]
        if len(support) != b - a + 1:
            raise ValueError(f"{tuple(dim)} is not the dimension vector of an interval")
        return cls(q, a, b)

    @classmethod
    def parse(cls, q: TypeAQuiver, text: str) -> "ThinModule":
        a, _, b = text.partition("..")
        return cls(q, int(a), int(b or a))


def components(support: Iterable[int]) -> List[Tuple[int, int]]:
    """Maximal runs of consecutive vertices, as ``(a, b)`` pairs."""
    runs = []
    for v in sorted(support):
        if runs and runs[-1][1] == v - 1:
            runs[-1][1] = v
        else:
            runs.append([v, v])
    return [tuple(r) for r in runs]


@lru_cache(maxsize=None)
def indecomposables(q: TypeAQuiver) -> Tuple[ThinModule, ...]:
    """All intervals, ordered by length then left end."""
    return tuple(ThinModule(q, a, a + length) for length in range(q.n) for a in range(1, q.n - length + 1))


def hom_support(q: TypeAQuiver, src: FrozenSet[int], dst: FrozenSet[int]) -> int:
    """``dim Hom`` between thin modules given by supports, as the nullity of
    the intertwiner system ``f_j M(i->j) = W(i->j) f_i`` over the rationals."""
    unknowns = sorted(src & dst)
    if not unknowns:
        return 0
    col = {v: c for c, v in enumerate(unknowns)}
    eqs = []
    for i, j in q.arrows:
        if i not in src or j not in dst:
            continue  # the equation lives in Hom(M_i, W_j) = 0
        row = [Fraction(0)] * len(unknowns)
        if j in src:  # f_j composed with M's identity map i -> j
            row[col[j]] += 1
        if i in dst:  # W's identity map i -> j composed with f_i
            row[col[i]] -= 1
        if any(row):
            eqs.append(tuple(row))
    return len(unknowns) - (rank(tuple(eqs)) if eqs else 0)


@lru_cache(maxsize=None)
def _hom_cached(q: TypeAQuiver, src: FrozenSet[int], dst: FrozenSet[int]) -> int:
    return hom_support(q, src, dst)


def hom_dim(m: ThinModule, w: ThinModule) -> int:
    if m.quiver != w.quiver:
        raise ValueError("modules live over different quivers")
    return _hom_cached(m.quiver, m.support, w.support)


def _closed(q: TypeAQuiver, support: FrozenSet[int], sub: FrozenSet[int]) -> bool:
    return all(j in sub for i, j in q.arrows if i in sub and j in support)


@lru_cache(maxsize=None)
def submodules_of_support(q: TypeAQuiver, support: FrozenSet[int]) -> Tuple[FrozenSet[int], ...]:
    """Vertex subsets of ``support`` closed under the arrow flow, including 0 and the whole."""
    verts = sorted(support)
    out = []
    for bits in range(1 << len(verts)):
        sub = frozenset(v for t, v in enumerate(verts) if bits >> t & 1)
        if _closed(q, support, sub):
            out.append(sub)
    out.sort(key=lambda s: (len(s), sorted(s)))
    return tuple(out)


def submodules(m: ThinModule) -> Tuple[FrozenSet[int], ...]:
    return submodules_of_support(m.quiver, m.support)
