"""Harder-Narasimhan filtrations of thin modules by exhaustive submodule search,
torsion classes induced by a central charge, and the stable objects of a
charge.

A module here is a tuple of summand supports, each a frozenset of vertices
(an interval, or any support subset when it arises as a quotient). A
submodule is a tuple of flow-closed subsets, one per summand.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, FrozenSet, List, Optional, Sequence, Tuple

from ..charge import CentralCharge, Phase, eval_charge
from .lattice import TorsionClassSet, TorsionLattice, cfho_from_chain
from .typea import ThinModule, TypeAQuiver, indecomposables, submodules_of_support

__all__ = [
    "HNFiltration",
    "hn_filtration",
    "hn_filtration_bruteforce",
    "mgs_filtration",
    "induced_torsion_class",
    "verify_induction",
    "stable_and_semistable",
    "is_semistable",
]

Support = FrozenSet[int]
Summands = Tuple[Support, ...]


def _as_summands(m) -> Tuple[TypeAQuiver, Summands]:
    if isinstance(m, ThinModule):
        return m.quiver, (m.support,)
    mods = list(m)
    if not mods or not all(isinstance(x, ThinModule) for x in mods):
        raise TypeError("expected a ThinModule or a nonempty sequence of ThinModules")
    q = mods[0].quiver
    if any(x.quiver != q for x in mods):
        raise ValueError("summands live over different quivers")
    return q, tuple(x.support for x in mods)


def _dim(q: TypeAQuiver, parts: Summands) -> Tuple[int, ...]:
    return tuple(sum(1 for p in parts if v in p) for v in range(1, q.n + 1))


def _length(parts: Summands) -> int:
    return sum(len(p) for p in parts)


@dataclass(frozen=True)
class HNFiltration:
    quiver: TypeAQuiver
    summands: Summands
    steps: Tuple[Summands, ...]  # X_1 < X_2 < ... < X_l = X, each as per-summand supports
    phases: Tuple[Phase, ...]

    @property
    def factors(self) -> Tuple[Summands, ...]:
        prev = tuple(frozenset() for _ in self.summands)
        out = []
        for step in self.steps:
            out.append(tuple(s - p for s, p in zip(step, prev)))
            prev = step
        return tuple(out)

    def factor_dims(self) -> List[Tuple[int, ...]]:
        return [_dim(self.quiver, f) for f in self.factors]

    def step_dims(self) -> List[Tuple[int, ...]]:
        return [_dim(self.quiver, s) for s in self.steps]

    def to_json(self) -> dict:
        from ..ratlin import fmt_rational

        return {
            "steps": [list(d) for d in self.step_dims()],
            "factors": [list(d) for d in self.factor_dims()],
            "cot": [fmt_rational(p.cot) for p in self.phases],
        }


def _subs(q: TypeAQuiver, parts: Summands, order: Optional[Callable] = None) -> List[Summands]:
    choices = [submodules_of_support(q, p) for p in parts]
    subs = [tuple(c) for c in product(*choices)]
    if order is not None:
        subs = order(subs)
    return subs


def _max_destabilizing(q: TypeAQuiver, z: CentralCharge, parts: Summands, order=None) -> Summands:
    """Nonzero submodule of maximal phase, then maximal length; asserted unique."""
    best, best_key = [], None
    for sub in _subs(q, parts, order):
        if not any(sub):
            continue
        key = (eval_charge(z, _dim(q, sub)), _length(sub))
        if best_key is None or key[0] > best_key[0] or (key[0] == best_key[0] and key[1] > best_key[1]):
            best, best_key = [sub], key
        elif key[0] == best_key[0] and key[1] == best_key[1]:
            best.append(sub)
    if len(best) != 1:
        raise AssertionError(f"maximally destabilizing subobject is not unique: {best}")
    return best[0]


def is_semistable(q: TypeAQuiver, z: CentralCharge, parts: Summands, strict: bool = False) -> bool:
    ph = eval_charge(z, _dim(q, parts))
    for sub in _subs(q, parts):
        if not any(sub) or sub == parts:
            continue
        p = eval_charge(z, _dim(q, sub))
        if p > ph or (strict and p == ph):
            return False
    return True


def _hn_parts(q: TypeAQuiver, z: CentralCharge, parts: Summands, order=None) -> HNFiltration:
    steps, phases = [], []
    done = tuple(frozenset() for _ in parts)
    rest = parts
    while any(rest):
        sub = _max_destabilizing(q, z, rest, order)
        done = tuple(d | s for d, s in zip(done, sub))
        steps.append(done)
        phases.append(eval_charge(z, _dim(q, sub)))
        rest = tuple(r - s for r, s in zip(rest, sub))
    filt = HNFiltration(q, parts, tuple(steps), tuple(phases))
    if any(not (a > b) for a, b in zip(phases, phases[1:])):
        raise AssertionError(f"HN phases not strictly decreasing: {phases}")
    for f in filt.factors:
        if not is_semistable(q, z, f):
            raise AssertionError(f"HN factor {f} is not semistable")
    return filt


def hn_filtration_bruteforce(m, z: CentralCharge, order=None) -> HNFiltration:
    """Direct exhaustive search over the whole (possibly decomposable) module."""
    q, parts = _as_summands(m)
    return _hn_parts(q, z, parts, order)


def hn_filtration(m, z: CentralCharge, order=None) -> HNFiltration:
    """HN filtration of a thin module or of a direct sum of thin modules.

    Sums are handled summand by summand, then merged: step ``i`` collects
    every summand's HN part of phase at least the ``i``-th distinct phase.
    ``order`` permutes the submodule search order (the result must not depend on it).
    """
    q, parts = _as_summands(m)
    if len(parts) == 1:
        return _hn_parts(q, z, parts, order)
    per = [_hn_parts(q, z, (p,), order) for p in parts]
    phases = sorted({ph for f in per for ph in f.phases}, reverse=True)
    steps = []
    for ph in phases:
        step = []
        for f in per:
            sup = frozenset()
            for s, fp in zip(f.steps, f.phases):
                if fp >= ph:
                    sup = s[0]
            step.append(sup)
        steps.append(tuple(step))
    return HNFiltration(q, parts, tuple(steps), tuple(phases))


def _torsion_part(q: TypeAQuiver, support: Support, t: TorsionClassSet) -> Support:
    """Largest submodule of the thin module ``support`` lying in ``t``."""
    out = frozenset()
    for sub in submodules_of_support(q, support):
        if t.contains_support(sub):
            out |= sub
    return out


def mgs_filtration(m: ThinModule, chain: Sequence[TorsionClassSet]) -> Tuple[Support, ...]:
    """Distinct nonzero steps of ``0 = X_0 <= ... <= X_m = X`` with ``X_i`` the
    torsion part of ``X`` for ``T_i``."""
    steps = []
    for t in chain[1:]:
        s = _torsion_part(m.quiver, m.support, t)
        if s and (not steps or s != steps[-1]):
            steps.append(s)
    return tuple(steps)


def _mdq_phase(q: TypeAQuiver, z: CentralCharge, m: ThinModule) -> Phase:
    return hn_filtration(m, z).phases[-1]


def induced_torsion_class(z: CentralCharge, r: Phase, q: TypeAQuiver) -> TorsionClassSet:
    """Indecomposables whose maximally destabilizing quotient has phase ``>= r``."""
    mods = indecomposables(q)
    members = frozenset(t for t, m in enumerate(mods) if _mdq_phase(q, z, m) >= r)
    t = TorsionClassSet(q, members)
    if not t.is_fixed_point():
        raise AssertionError(f"T_>= {r} is not a torsion class: {t}")
    return t


def _chain_and_bricks(lat: TorsionLattice, chain) -> Tuple[Tuple[TorsionClassSet, ...], Tuple[ThinModule, ...]]:
    classes = tuple(lat.classes[c] if isinstance(c, int) else c for c in chain)
    return classes, cfho_from_chain(lat, chain)


def verify_induction(lat: TorsionLattice, chain, z: CentralCharge) -> bool:
    """``T_{>= phi(N_i)} = T_i`` for every ``i``.

    Raises ``ValueError`` when two bricks of the chain share a phase.
    """
    classes, bricks = _chain_and_bricks(lat, chain)
    phases = [eval_charge(z, n.dim) for n in bricks]
    if len(set(phases)) != len(phases):
        raise ValueError("the charge does not separate the chain's bricks")
    return all(induced_torsion_class(z, ph, lat.quiver) == t for ph, t in zip(phases, classes[1:]))


def stable_and_semistable(z: CentralCharge, q: TypeAQuiver) -> Tuple[Tuple[ThinModule, ...], Tuple[ThinModule, ...]]:
    """Indecomposables that are ``z``-stable, and those that are ``z``-semistable."""
    stables, semis = [], []
    for m in indecomposables(q):
        parts = (m.support,)
        if is_semistable(q, z, parts):
            semis.append(m)
            if is_semistable(q, z, parts, strict=True):
                stables.append(m)
    return tuple(stables), tuple(semis)
