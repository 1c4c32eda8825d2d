"""Projectives, the AR translate via the Coxeter transform, g-vectors,
tau-tilting pairs of every torsion class and their c-matrices.

Summands of a pair are tagged ``("M", ThinModule)`` or ``("P", vertex)``.
The g-matrix lists ``g(M_i)`` then ``-g(P_j)``; the c-matrix is
``(G^T)^{-1}``. In this convention the pair ``(0, A)`` has ``C = -I``, so
oracle c-matrices are the negatives of framed-quiver c-matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from ..ratlin import Matrix, is_z_invertible, mat_mul, mat_vec, rat_inverse, transpose
from ..cluster import is_sign_coherent
from .lattice import TorsionClassSet, TorsionLattice
from .typea import ThinModule, TypeAQuiver, check_bound, hom_dim, indecomposables

__all__ = [
    "projective",
    "injective",
    "cartan_matrix",
    "coxeter_matrix",
    "is_projective",
    "tau",
    "g_vector",
    "TauTiltingPair",
    "TauTiltingData",
    "tau_tilting_pairs_and_cmatrices",
    "check_lemma_x",
    "check_green_iff_up",
    "tau_green_walks",
    "chain_positions",
]

Summand = Tuple[str, object]


def _reach(q: TypeAQuiver, v: int, forward: bool) -> Tuple[int, int]:
    seen, todo = {v}, [v]
    while todo:
        u = todo.pop()
        for i, j in q.arrows:
            a, b = (i, j) if forward else (j, i)
            if a == u and b not in seen:
                seen.add(b)
                todo.append(b)
    return min(seen), max(seen)


def projective(q: TypeAQuiver, i: int) -> ThinModule:
    """``P(i)``: supported on the vertices reachable from ``i``."""
    return ThinModule(q, *_reach(q, i, True))


def injective(q: TypeAQuiver, i: int) -> ThinModule:
    return ThinModule(q, *_reach(q, i, False))


def is_projective(m: ThinModule) -> bool:
    return any(projective(m.quiver, i) == m for i in range(1, m.quiver.n + 1))


@lru_cache(maxsize=None)
def cartan_matrix(q: TypeAQuiver) -> Matrix:
    """Columns are ``dim P(i)``."""
    return transpose(tuple(projective(q, i).dim for i in range(1, q.n + 1)))


@lru_cache(maxsize=None)
def coxeter_matrix(q: TypeAQuiver) -> Matrix:
    """``Phi = -C^T C^{-1}``; sends ``dim P(i)`` to ``-dim I(i)``."""
    c = cartan_matrix(q)
    prod = mat_mul(transpose(c), rat_inverse(c))
    return tuple(tuple(-x for x in row) for row in prod)


def tau(m: ThinModule) -> Optional[ThinModule]:
    if is_projective(m):
        return None
    img = mat_vec(coxeter_matrix(m.quiver), m.dim)
    try:
        return ThinModule.from_dim(m.quiver, tuple(int(x) for x in img))
    except ValueError as exc:
        raise AssertionError(f"Coxeter image {img} of {m} is not an interval") from exc


def _top(m: ThinModule) -> List[int]:
    s = m.support
    return [v for v in sorted(s) if not any(j == v and i in s for i, j in m.quiver.arrows)]


def g_vector(m: ThinModule) -> Tuple[int, ...]:
    """``a - b`` for the minimal presentation ``P_1 -> P_0 -> m -> 0``.

    ``P_0`` is the projective cover (one ``P(v)`` per top vertex); the
    kernel is projective because the algebra is hereditary, so its
    decomposition is read off its dimension vector through the Cartan matrix.
    """
    q = m.quiver
    a = [0] * q.n
    for v in _top(m):
        a[v - 1] += 1
    c = cartan_matrix(q)
    p0 = mat_vec(c, a)
    kernel = tuple(x - y for x, y in zip(p0, m.dim))
    b = mat_vec(rat_inverse(c), kernel)
    if any(x < 0 or getattr(x, "denominator", 1) != 1 for x in b):
        raise AssertionError(f"kernel of the projective cover of {m} is not projective: {b}")
    b = [int(x) for x in b]
    if any(x and y for x, y in zip(a, b)):
        raise AssertionError(f"presentation of {m} is not minimal")
    return tuple(x - y for x, y in zip(a, b))


@dataclass(frozen=True)
class TauTiltingPair:
    m_part: Tuple[ThinModule, ...]
    p_part: Tuple[int, ...]  # vertices i of the projectives P(i)

    @property
    def summands(self) -> Tuple[Summand, ...]:
        return tuple(("M", x) for x in self.m_part) + tuple(("P", i) for i in self.p_part)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.m_part)) + " | " + ",".join(f"P{i}" for i in self.p_part) + ")"


@dataclass(frozen=True)
class TauTiltingData:
    torsion_class: TorsionClassSet
    pair: TauTiltingPair
    g: Matrix
    c: Matrix

    def c_vector(self, summand: Summand) -> Tuple[int, ...]:
        k = self.pair.summands.index(summand)
        return tuple(row[k] for row in self.c)


def _summand_g(q: TypeAQuiver, s: Summand) -> Tuple[int, ...]:
    kind, x = s
    if kind == "M":
        return g_vector(x)
    return tuple(-v for v in g_vector(projective(q, x)))


def _pair_for(t: TorsionClassSet) -> TauTiltingPair:
    q = t.quiver
    mods = t.modules
    m_part = []
    for x in mods:
        tx = tau(x)
        if tx is None or all(hom_dim(y, tx) == 0 for y in mods):
            m_part.append(x)
    p_part = [i for i in range(1, q.n + 1) if all(i not in y.support for y in mods)]
    pair = TauTiltingPair(tuple(sorted(m_part, key=lambda m: (m.a, m.b))), tuple(p_part))
    if len(pair.m_part) + len(pair.p_part) != q.n:
        raise AssertionError(f"{t} gives a pair with {len(pair.summands)} summands, expected {q.n}")
    return pair


def _data(t: TorsionClassSet, pair: TauTiltingPair) -> TauTiltingData:
    q = t.quiver
    g = transpose(tuple(_summand_g(q, s) for s in pair.summands))
    if not is_z_invertible(g):
        raise AssertionError(f"g-matrix of {pair} is not invertible over Z")
    c = rat_inverse(transpose(g))
    if not is_sign_coherent(c):
        raise AssertionError(f"c-matrix of {pair} is not sign-coherent")
    return TauTiltingData(t, pair, g, c)


@lru_cache(maxsize=None)
def _all_pairs(lat: TorsionLattice) -> Dict[int, TauTiltingData]:
    return {c.mask: _data(c, _pair_for(c)) for c in lat.classes}


def tau_tilting_pairs_and_cmatrices(lat: TorsionLattice) -> Dict[int, TauTiltingData]:
    """Torsion class bitmask -> pair, g-matrix, c-matrix."""
    check_bound(lat.quiver.n)
    return _all_pairs(lat)


def _exchange(lo: TauTiltingData, hi: TauTiltingData) -> Tuple[Summand, Summand]:
    a, b = set(lo.pair.summands), set(hi.pair.summands)
    x, y = a - b, b - a
    if len(x) != 1 or len(y) != 1:
        raise AssertionError(f"{lo.pair} and {hi.pair} are not a mutation of each other")
    return x.pop(), y.pop()


def check_lemma_x(lat: TorsionLattice, edge: Tuple[int, int]) -> bool:
    """On a cover ``T < T'`` labelled ``N``: ``c(X) = -dim N`` and ``c(Y) = dim N``."""
    data = tau_tilting_pairs_and_cmatrices(lat)
    lo, hi = data[lat.classes[edge[0]].mask], data[lat.classes[edge[1]].mask]
    x, y = _exchange(lo, hi)
    dim = lat.labels[edge].dim
    return lo.c_vector(x) == tuple(-v for v in dim) and hi.c_vector(y) == dim


def check_green_iff_up(lat: TorsionLattice, edge: Tuple[int, int]) -> bool:
    """Mutating the smaller pair is green (``c(X) <= 0``) and the reverse mutation is red."""
    data = tau_tilting_pairs_and_cmatrices(lat)
    lo, hi = data[lat.classes[edge[0]].mask], data[lat.classes[edge[1]].mask]
    x, y = _exchange(lo, hi)
    return all(v <= 0 for v in lo.c_vector(x)) and not all(v <= 0 for v in hi.c_vector(y))


def tau_green_walks(lat: TorsionLattice, limit: int = None) -> List[Tuple[TauTiltingPair, ...]]:
    """Maximal green sequences of tau-tilting pairs, found without the Hasse
    diagram: pairs are adjacent when they share ``n - 1`` summands, and a
    step is green when the exchanged summand has a non-positive c-vector."""
    data = tau_tilting_pairs_and_cmatrices(lat)
    q = lat.quiver
    items = sorted(data.values(), key=lambda d: (len(d.torsion_class.members), d.torsion_class.mask))
    sets = [frozenset(d.pair.summands) for d in items]
    start = next(i for i, d in enumerate(items) if not d.pair.m_part)
    goal = next(i for i, d in enumerate(items) if not d.pair.p_part and len(d.torsion_class.members) == len(indecomposables(q)))
    nbrs: Dict[int, List[int]] = {}
    for i, si in enumerate(sets):
        nbrs[i] = []
        for j, sj in enumerate(sets):
            if i != j and len(si & sj) == q.n - 1:
                (x,) = si - sj
                if all(v <= 0 for v in items[i].c_vector(x)):
                    nbrs[i].append(j)
    out = []
    stack = [(start,)]
    while stack:
        path = stack.pop()
        if path[-1] == goal:
            out.append(tuple(items[i].pair for i in path))
            if limit is not None and len(out) >= limit:
                break
            continue
        for j in reversed(nbrs[path[-1]]):
            stack.append(path + (j,))
    return out


def chain_positions(lat: TorsionLattice, chain: Sequence[int]):
    """Follow a maximal chain through its tau-tilting pairs, keeping each
    summand at the position (vertex) it replaced.

    Returns ``(steps, cmats)``: the vertex exchanged at each cover and the
    oracle c-matrix of every pair with columns in position order.
    """
    data = tau_tilting_pairs_and_cmatrices(lat)
    q = lat.quiver
    pos: List[Summand] = [("P", i) for i in range(1, q.n + 1)]
    steps, cmats = [], []

    def ordered(d: TauTiltingData) -> Matrix:
        cols = [d.c_vector(s) for s in pos]
        return transpose(tuple(cols))

    first = data[lat.classes[chain[0]].mask]
    cmats.append(ordered(first))
    for a, b in zip(chain, chain[1:]):
        lo, hi = data[lat.classes[a].mask], data[lat.classes[b].mask]
        x, y = _exchange(lo, hi)
        k = pos.index(x)
        pos[k] = y
        steps.append(k + 1)
        cmats.append(ordered(hi))
    return tuple(steps), tuple(cmats)
