"""Central charges, exact phase comparison and crossing-inequality systems.

Phases are never turned into floats: ``phi(v) < phi(w)`` iff
``cot(v) > cot(w)``, and cotangents ``<alpha,v>/<beta,v>`` are compared by
cross-multiplication (``<beta, v>`` is always positive).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import total_ordering
from math import gcd
from functools import reduce
from typing import Iterable, Optional, Sequence, Tuple

from .cluster import BrickSeq
from .ratlin import Feasibility, StrictSystem, dot, fmt_rational, strict_feasible

__all__ = [
    "CentralCharge",
    "Phase",
    "Cmp",
    "CrossingReport",
    "eval_charge",
    "phase_cmp",
    "build_crossing_system",
    "solve_crossing",
    "verify_charge_order",
]


def _vec(v) -> Tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


@dataclass(frozen=True)
class CentralCharge:
    alpha: Tuple[Fraction, ...]
    beta: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", _vec(self.alpha))
        object.__setattr__(self, "beta", _vec(self.beta))
        if len(self.alpha) != len(self.beta):
            raise ValueError("alpha and beta have different ranks")
        if any(b <= 0 for b in self.beta):
            raise ValueError("beta must be strictly positive")

    @property
    def n(self) -> int:
        return len(self.beta)

    def __call__(self, v: Sequence[int]) -> "Phase":
        return eval_charge(self, v)


@total_ordering
@dataclass(frozen=True, eq=False)
class Phase:
    """Phase of ``Z(v) = cot_num + i * cot_den``; ordered like ``arg Z / pi``."""

    cot_num: Fraction
    cot_den: Fraction

    def __post_init__(self):
        if self.cot_den <= 0:
            raise ValueError("phase needs a positive imaginary part")

    @property
    def cot(self) -> Fraction:
        return Fraction(self.cot_num) / Fraction(self.cot_den)

    def _key(self, other: "Phase") -> int:
        # sign of cot(other) - cot(self); positive means self has the larger phase
        return _sign(other.cot_num * self.cot_den - self.cot_num * other.cot_den)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Phase):
            return NotImplemented
        return self._key(other) == 0

    def __lt__(self, other: "Phase") -> bool:
        return self._key(other) < 0

    def __hash__(self) -> int:
        return hash(self.cot)

    def __repr__(self) -> str:
        return f"Phase(cot={fmt_rational(self.cot)})"


def _sign(x) -> int:
    return (x > 0) - (x < 0)


class Cmp(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def eval_charge(z: CentralCharge, v: Sequence[int]) -> Phase:
    if len(v) != z.n:
        raise ValueError(f"rank mismatch: vector of length {len(v)} for a rank {z.n} charge")
    if not any(v) or any(x < 0 for x in v):
        raise ValueError(f"{tuple(v)} is not a nonzero non-negative dimension vector")
    return Phase(Fraction(dot(z.alpha, v)), Fraction(dot(z.beta, v)))


def phase_cmp(z: CentralCharge, v: Sequence[int], w: Sequence[int]) -> Cmp:
    """Compare ``phi(v)`` with ``phi(w)``."""
    pv, pw = eval_charge(z, v), eval_charge(z, w)
    return Cmp(pv._key(pw))


def _primitive(row: Sequence[int]) -> Tuple[int, ...]:
    g = reduce(gcd, row, 0)
    return tuple(x // g for x in row) if g > 1 else tuple(row)


def build_crossing_system(bricks: BrickSeq, beta: Sequence) -> StrictSystem:
    """Row ``i`` is ``<beta,N_{i+1}> N_i - <beta,N_i> N_{i+1}``, required to pair negatively with alpha."""
    beta = _vec(beta)
    if len(beta) != bricks.n:
        raise ValueError(f"rank mismatch: beta has length {len(beta)}, bricks have rank {bricks.n}")
    if any(b <= 0 for b in beta):
        raise ValueError("beta must be strictly positive")
    if len(bricks) == 0:
        raise ValueError("empty brick sequence")
    rows = []
    for a, b in zip(bricks.dims, bricks.dims[1:]):
        ba, bb = dot(beta, a), dot(beta, b)
        row = [bb * x - ba * y for x, y in zip(a, b)]
        den = reduce(lambda acc, f: acc * f.denominator // gcd(acc, f.denominator), map(Fraction, row), 1)
        rows.append(_primitive(tuple(int(Fraction(x) * den) for x in row)))
    return StrictSystem(bricks.n, tuple(rows))


def verify_charge_order(alpha: Sequence, beta: Sequence, bricks: BrickSeq) -> bool:
    """True iff ``cot N_1 < cot N_2 < ... < cot N_m``, i.e. phases strictly decrease."""
    z = CentralCharge(alpha, beta)
    phases = [eval_charge(z, d) for d in bricks.dims]
    return all(p > q for p, q in zip(phases, phases[1:]))


@dataclass(frozen=True)
class CrossingReport:
    bricks: BrickSeq
    beta_used: Tuple[Fraction, ...]
    system: StrictSystem
    alpha: Optional[Tuple[Fraction, ...]]
    betas_tried: Tuple[Tuple[Fraction, ...], ...] = ()

    @property
    def feasible(self) -> bool:
        return self.alpha is not None

    @property
    def verdict(self) -> str:
        return "feasible" if self.feasible else "infeasible_for_given_beta"

    def to_json(self) -> dict:
        out = {
            "bricks": self.bricks.to_json(),
            "beta": [fmt_rational(x) for x in self.beta_used],
            "rows": [list(r) for r in self.system.rows],
            "verdict": self.verdict,
        }
        if self.alpha is not None:
            out["alpha"] = [fmt_rational(x) for x in self.alpha]
        if len(self.betas_tried) > 1:
            out["betas_tried"] = [[fmt_rational(x) for x in b] for b in self.betas_tried]
        return out


def solve_crossing(
    bricks: BrickSeq,
    beta: Optional[Sequence] = None,
    beta_sweep: Iterable[Sequence] = (),
) -> CrossingReport:
    """Decide the crossing inequalities in alpha for a fixed beta.

    ``beta`` defaults to all ones. Candidates in ``beta_sweep`` are tried after
    it, in order, until one is feasible. An infeasible report only speaks for
    the betas that were tried.
    """
    candidates = [_vec(beta) if beta is not None else tuple(Fraction(1) for _ in range(bricks.n))]
    candidates += [_vec(b) for b in beta_sweep]
    tried = []
    report = None
    for b in candidates:
        tried.append(b)
        system = build_crossing_system(bricks, b)
        result: Feasibility = strict_feasible(system)
        report = CrossingReport(bricks, b, system, result.witness if result else None, tuple(tried))
        if result:
            if not verify_charge_order(result.witness, b, bricks):
                raise AssertionError("crossing witness does not order the bricks")
            break
    return report
