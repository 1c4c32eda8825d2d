"""Quiver and framed-quiver mutation, green walks, maximal green sequence
enumeration, brick extraction and the rotation transform ``B_k``.

Vertices are 1-based in every public signature. The exchange matrix of a
quiver has ``b[i][j] = #(i -> j) - #(j -> i)``; with that encoding the
linear A4 walk (2, 1, 4, 3, 1, 2) gives the c-matrix chain
(I, ..., -P) used as the golden test.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from typing import Sequence, Tuple

from . import kernels
from .errors import (
    BudgetExceeded,
    FirstBrickNotSimpleAtK,
    NonGreenStep,
    NonPositiveImage,
    RotatedBetaNotPositive,
)
from .ratlin import Matrix, identity, is_z_invertible, mat_vec, transpose

__all__ = [
    "Quiver",
    "CMatrixState",
    "GreenWalk",
    "BrickSeq",
    "Enumeration",
    "exchange_matrix",
    "quiver_from_exchange",
    "mutate_exchange",
    "mutate_quiver",
    "mutate_state",
    "initial_state",
    "green_vertices",
    "is_sign_coherent",
    "is_negative_permutation",
    "run_walk",
    "bricks_of_walk",
    "enumerate_mgs",
    "rotation_matrix",
    "rotate_cfho",
    "rotate_charge",
]


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        arrows = tuple(sorted(tuple(a) for a in self.arrows))
        object.__setattr__(self, "arrows", arrows)
        if self.n < 1:
            raise ValueError("a quiver needs at least one vertex")
        pairs = set(arrows)
        for i, j in arrows:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"arrow {(i, j)} out of range for n={self.n}")
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if (j, i) in pairs:
                raise ValueError(f"2-cycle between {i} and {j}")

    @property
    def acyclic(self) -> bool:
        return _is_acyclic(self)

    def arrow_count(self, i: int, j: int) -> int:
        return sum(1 for a in self.arrows if a == (i, j))

    def to_json(self) -> dict:
        return {"n": self.n, "arrows": [list(a) for a in self.arrows]}

    @classmethod
    def from_json(cls, data: dict) -> "Quiver":
        return cls(int(data["n"]), tuple((int(i), int(j)) for i, j in data.get("arrows", [])))

    @classmethod
    def linear_a(cls, n: int) -> "Quiver":
        return cls(n, tuple((i, i + 1) for i in range(1, n)))


_ACYCLIC_CACHE: dict = {}


def _is_acyclic(q: Quiver) -> bool:
    if q in _ACYCLIC_CACHE:
        return _ACYCLIC_CACHE[q]
    indeg = Counter(j for _, j in q.arrows)
    out = {v: [j for i, j in q.arrows if i == v] for v in range(1, q.n + 1)}
    ready = [v for v in range(1, q.n + 1) if indeg[v] == 0]
    seen = 0
    while ready:
        v = ready.pop()
        seen += 1
        for j in out[v]:
            indeg[j] -= 1
            if indeg[j] == 0:
                ready.append(j)
    _ACYCLIC_CACHE[q] = seen == q.n
    return seen == q.n


def exchange_matrix(q: Quiver) -> Matrix:
    b = [[0] * q.n for _ in range(q.n)]
    for i, j in q.arrows:
        b[i - 1][j - 1] += 1
        b[j - 1][i - 1] -= 1
    return tuple(tuple(r) for r in b)


def quiver_from_exchange(b: Matrix) -> Quiver:
    n = len(b)
    arrows = []
    for i in range(n):
        for j in range(n):
            if b[i][j] > 0:
                arrows.extend([(i + 1, j + 1)] * b[i][j])
    return Quiver(n, tuple(arrows))


def _check_vertex(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise IndexError(f"vertex {k} out of range 1..{n}")


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


def mutate_exchange(b: Matrix, k: int) -> Matrix:
    n = len(b)
    _check_vertex(n, k)
    k -= 1
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == k or j == k:
                row.append(-b[i][j])
            else:
                row.append(b[i][j] + _sgn(b[i][k]) * max(b[i][k] * b[k][j], 0))
        out.append(tuple(row))
    return tuple(out)


def mutate_quiver(q: Quiver, k: int) -> Quiver:
    return quiver_from_exchange(mutate_exchange(exchange_matrix(q), k))


@dataclass(frozen=True)
class CMatrixState:
    b: Matrix
    c: Matrix

    @property
    def n(self) -> int:
        return len(self.b)

    def column(self, k: int) -> Tuple[int, ...]:
        return tuple(row[k - 1] for row in self.c)

    def to_json(self) -> dict:
        return {"b": [list(r) for r in self.b], "c": [list(r) for r in self.c]}


def initial_state(q: Quiver) -> CMatrixState:
    return CMatrixState(exchange_matrix(q), identity(q.n))


def mutate_state(s: CMatrixState, k: int) -> CMatrixState:
    """Mutate the extended matrix ``[B; C]`` at ``k``."""
    n = s.n
    _check_vertex(n, k)
    kk = k - 1
    brow = s.b[kk]
    c = []
    for row in s.c:
        cik = row[kk]
        new = []
        for j in range(n):
            if j == kk:
                new.append(-row[j])
            else:
                new.append(row[j] + max(cik, 0) * max(brow[j], 0) - max(-cik, 0) * max(-brow[j], 0))
        c.append(tuple(new))
    return CMatrixState(mutate_exchange(s.b, k), tuple(c))


def green_vertices(s: CMatrixState) -> Tuple[int, ...]:
    """Vertices whose c-column is nonzero and componentwise non-negative."""
    out = []
    for k in range(1, s.n + 1):
        col = s.column(k)
        if any(col) and all(x >= 0 for x in col):
            out.append(k)
    return tuple(out)


def is_sign_coherent(c: Matrix) -> bool:
    for col in transpose(c):
        if any(x > 0 for x in col) and any(x < 0 for x in col):
            return False
    return True


def is_negative_permutation(c: Matrix) -> bool:
    n = len(c)
    cols = transpose(c)
    hits = set()
    for col in cols:
        nz = [(i, x) for i, x in enumerate(col) if x != 0]
        if len(nz) != 1 or nz[0][1] != -1:
            return False
        hits.add(nz[0][0])
    return len(hits) == n


@dataclass(frozen=True)
class GreenWalk:
    """Steps ``k_1..k_m`` from ``(B(quiver), I)``; ``states`` holds all ``m + 1`` states."""

    quiver: Quiver
    steps: Tuple[int, ...]

    @cached_property
    def states(self) -> Tuple[CMatrixState, ...]:
        state = initial_state(self.quiver)
        states = [state]
        for k in self.steps:
            state = mutate_state(state, k)
            states.append(state)
        return tuple(states)

    @property
    def final(self) -> CMatrixState:
        return self.states[-1]

    @property
    def is_maximal(self) -> bool:
        return not green_vertices(self.final)

    def to_json(self) -> dict:
        return {"steps": list(self.steps), "states": [[list(r) for r in s.c] for s in self.states]}


@dataclass(frozen=True)
class BrickSeq:
    n: int
    dims: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(tuple(int(x) for x in d) for d in self.dims))
        for d in self.dims:
            if len(d) != self.n:
                raise ValueError(f"brick {d} does not have rank {self.n}")
            if not any(d) or any(x < 0 for x in d):
                raise ValueError(f"brick {d} is not a nonzero non-negative vector")

    def __len__(self) -> int:
        return len(self.dims)

    def __iter__(self):
        return iter(self.dims)

    def __getitem__(self, i):
        return self.dims[i]

    def to_json(self) -> list:
        return [list(d) for d in self.dims]

    @classmethod
    def from_json(cls, data) -> "BrickSeq":
        dims = [tuple(int(x) for x in d) for d in data]
        if not dims:
            raise ValueError("empty brick list")
        return cls(len(dims[0]), tuple(dims))


def unit(n: int, k: int) -> Tuple[int, ...]:
    return tuple(1 if i == k - 1 else 0 for i in range(n))


def run_walk(q: Quiver, seq: Sequence[int]) -> GreenWalk:
    state = initial_state(q)
    states = [state]
    for idx, k in enumerate(seq):
        _check_vertex(q.n, k)
        if k not in green_vertices(state):
            raise NonGreenStep(idx, k)
        state = mutate_state(state, k)
        states.append(state)
    walk = GreenWalk(q, tuple(seq))
    walk.__dict__["states"] = tuple(states)
    return walk


def bricks_of_walk(w: GreenWalk) -> BrickSeq:
    return BrickSeq(w.quiver.n, tuple(w.states[i].column(k) for i, k in enumerate(w.steps)))


@dataclass(frozen=True)
class Enumeration:
    walks: Tuple[GreenWalk, ...]
    truncated: bool
    overlong: Tuple[Tuple[int, ...], ...] = field(default=())


def enumerate_mgs(
    q: Quiver,
    max_len: int = 64,
    limit: int = 1000,
    on_overlong: str = "raise",
) -> Enumeration:
    """Depth-first, lexicographic enumeration of maximal green sequences.

    Stops after ``limit`` walks (``truncated=True``). A branch still green at
    ``max_len`` steps is collected in ``overlong``; with ``on_overlong="raise"``
    a :class:`BudgetExceeded` carrying those prefixes is raised at the end.
    """
    if not q.acyclic:
        raise ValueError("maximal green sequence enumeration is restricted to acyclic quivers")
    if max_len < 1 or limit < 1:
        raise ValueError("budgets must be positive")
    steps, overlong, truncated = kernels.green_dfs(exchange_matrix(q), max_len, limit)
    if overlong and on_overlong == "raise":
        raise BudgetExceeded(f"{len(overlong)} branch(es) still green after {max_len} steps", overlong)
    return Enumeration(tuple(GreenWalk(q, tuple(s)) for s in steps), truncated, tuple(map(tuple, overlong)))


# --- rotation ----------------------------------------------------------------------


def rotation_matrix(q: Quiver, k: int, reflection: bool = False) -> Matrix:
    """``B_k``: identity off row ``k``; row ``k`` counts arrows ``k -> j``.

    The verbatim definition puts 0 at ``(k, k)`` and is idempotent. With
    ``reflection=True`` the diagonal entry is -1, which is an involution.
    """
    _check_vertex(q.n, k)
    rows = [list(r) for r in identity(q.n)]
    rows[k - 1] = [q.arrow_count(k, j) if j != k else 0 for j in range(1, q.n + 1)]
    if reflection:
        rows[k - 1][k - 1] = -1
    return tuple(tuple(r) for r in rows)


def rotate_cfho(bricks: BrickSeq, k: int, q: Quiver, reflection: bool = False) -> BrickSeq:
    _check_vertex(q.n, k)
    if len(bricks) == 0 or tuple(bricks[0]) != unit(q.n, k):
        raise FirstBrickNotSimpleAtK(f"first brick is {bricks[0] if len(bricks) else None}, expected e_{k}")
    bk = rotation_matrix(q, k, reflection)
    out = []
    for i, d in enumerate(bricks.dims[1:], start=1):
        img = mat_vec(bk, d)
        if not any(img) or any(x < 0 for x in img):
            raise NonPositiveImage(i, img)
        out.append(img)
    out.append(unit(q.n, k))
    return BrickSeq(q.n, tuple(out))


def rotate_charge(alpha: Sequence, beta: Sequence, k: int, q: Quiver, reflection: bool = False):
    """Transport a charge along ``B_k``: returns ``(B_k^T alpha, B_k^T beta)`` as a CentralCharge."""
    from .charge import CentralCharge

    bk = rotation_matrix(q, k, reflection)
    beta = tuple(Fraction(x) for x in beta)
    alpha = tuple(Fraction(x) for x in alpha)
    image = mat_vec(bk, beta)
    if any(x <= 0 for x in image):
        raise RotatedBetaNotPositive(f"B_k beta = {[str(x) for x in image]} is not strictly positive")
    bkt = transpose(bk)
    new_beta = mat_vec(bkt, beta)
    if any(x <= 0 for x in new_beta):
        raise RotatedBetaNotPositive(f"B_k^T beta = {[str(x) for x in new_beta]} is not strictly positive")
    return CentralCharge(mat_vec(bkt, alpha), new_beta)


def state_invariants_hold(s: CMatrixState) -> bool:
    return is_sign_coherent(s.c) and is_z_invertible(s.c)
