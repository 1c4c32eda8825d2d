"""Exact rational arithmetic, small integer/rational matrices and strict
homogeneous feasibility.

Matrices are plain tuples of row tuples (entries ``int`` or ``Fraction``).
Everything here is a pure function over immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Optional, Sequence, Tuple, Union

Rational = Fraction
Scalar = Union[int, Fraction]
Vector = Tuple[Scalar, ...]
Matrix = Tuple[Tuple[Scalar, ...], ...]

__all__ = [
    "Rational",
    "Matrix",
    "Vector",
    "StrictSystem",
    "Feasibility",
    "as_matrix",
    "identity",
    "shape",
    "transpose",
    "mat_mul",
    "mat_vec",
    "dot",
    "det",
    "rat_inverse",
    "is_z_invertible",
    "strict_feasible",
    "fmt_rational",
    "parse_rational",
    "parse_vector",
]


def as_matrix(rows: Iterable[Iterable[Scalar]]) -> Matrix:
    m = tuple(tuple(r) for r in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise ValueError("ragged matrix")
    return m


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def shape(m: Matrix) -> Tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise ValueError(f"dimension mismatch: {ra}x{ca} times {rb}x{cb}")
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(a: Matrix, v: Sequence[Scalar]) -> Vector:
    if shape(a)[1] != len(v):
        raise ValueError("dimension mismatch")
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    if len(u) != len(v):
        raise ValueError(f"rank mismatch: {len(u)} vs {len(v)}")
    return sum(x * y for x, y in zip(u, v))


def _echelon(m: Matrix, augment: Optional[Matrix] = None):
    """Gauss-Jordan over the rationals. Returns (reduced rows, pivots, sign)."""
    rows = [[Fraction(x) for x in r] + ([Fraction(x) for x in augment[i]] if augment else [])
            for i, r in enumerate(m)]
    ncols = shape(m)[1]
    pivots = []
    sign = 1
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            sign = -sign
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append((c, pv))
        r += 1
    return rows, pivots, sign


def rank(m: Matrix) -> int:
    return len(_echelon(m)[1]) if m else 0


def det(m: Matrix) -> Fraction:
    n, c = shape(m)
    if n != c:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    _, pivots, sign = _echelon(m)
    if len(pivots) < n:
        return Fraction(0)
    return sign * reduce(lambda acc, p: acc * p[1], pivots, Fraction(1))


def rat_inverse(m: Matrix) -> Matrix:
    """Exact inverse over the rationals; entries that are integral come back as ``int``."""
    n, c = shape(m)
    if n != c:
        raise ValueError("inverse of a non-square matrix")
    rows, pivots, _ = _echelon(m, identity(n))
    if len(pivots) < n:
        raise ZeroDivisionError("singular matrix")
    return tuple(tuple(_demote(x) for x in r[n:]) for r in rows)


def _demote(x: Fraction) -> Scalar:
    return x.numerator if x.denominator == 1 else x


def is_z_invertible(m: Matrix) -> bool:
    n, c = shape(m)
    if n != c:
        raise ValueError("not square")
    return abs(det(m)) == 1


# --- strict homogeneous feasibility -------------------------------------------------


@dataclass(frozen=True)
class StrictSystem:
    """Rows ``d_i``; the system asks for ``alpha`` with ``<alpha, d_i> < 0`` for every row."""

    dim: int
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.dim:
                raise ValueError(f"row {r} has length {len(r)}, expected {self.dim}")
            if not any(r):
                raise ValueError("zero row in a strict system is unsatisfiable by construction")

    def evaluate(self, alpha: Sequence[Scalar]) -> Tuple[Scalar, ...]:
        return tuple(dot(r, alpha) for r in self.rows)

    def satisfied_by(self, alpha: Sequence[Scalar]) -> bool:
        return all(v < 0 for v in self.evaluate(alpha))


@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    witness: Optional[Tuple[Fraction, ...]] = None

    def __bool__(self) -> bool:
        return self.feasible


def _normalize(coefs: Sequence[Fraction], rhs: Fraction):
    """Scale ``coefs . x <= rhs`` by a positive factor so coefs are coprime integers."""
    den = lcm(*(c.denominator for c in coefs), rhs.denominator)
    ints = [int(c * den) for c in coefs]
    g = reduce(gcd, ints, 0)
    if g == 0:
        return tuple(ints), rhs
    return tuple(x // g for x in ints), rhs * den / g


def _add_row(table: dict, coefs, rhs) -> None:
    # dominance pruning: same direction, keep the tighter bound
    old = table.get(coefs)
    if old is None or rhs < old:
        table[coefs] = rhs


def _fm_eliminate(rows: dict, var: int):
    """One Fourier-Motzkin step on ``{coefs: rhs}`` (meaning ``coefs.x <= rhs``)."""
    pos, neg, out = [], [], {}
    for coefs, rhs in rows.items():
        c = coefs[var]
        if c > 0:
            pos.append((coefs, rhs))
        elif c < 0:
            neg.append((coefs, rhs))
        else:
            _add_row(out, coefs, rhs)
    for pc, pr in pos:
        for nc, nr in neg:
            a, b = pc[var], -nc[var]
            coefs = tuple(Fraction(b * x + a * y) for x, y in zip(pc, nc))
            rhs = Fraction(b) * pr + Fraction(a) * nr
            key, val = _normalize(coefs, rhs)
            if not any(key):
                if val < 0:
                    return None
                continue
            _add_row(out, key, val)
    return out


def strict_feasible(system: StrictSystem) -> Feasibility:
    """Decide ``exists alpha: <alpha, d_i> < 0 for all i`` exactly.

    A homogeneous strict system is feasible iff ``<alpha, d_i> <= -1`` is, so
    Fourier-Motzkin on the weak system decides it. A witness is rebuilt by
    back-substitution and checked before it is returned.
    """
    n = system.dim
    if not system.rows:
        return Feasibility(True, tuple(Fraction(0) for _ in range(n)))

    level = {}
    for r in system.rows:
        key, val = _normalize([Fraction(x) for x in r], Fraction(-1))
        _add_row(level, key, val)
    levels = [level]
    for var in range(n - 1, -1, -1):
        level = _fm_eliminate(level, var)
        if level is None:
            return Feasibility(False)
        levels.append(level)
    if any(rhs < 0 for rhs in level.values()):
        return Feasibility(False)

    # levels[n - j] constrains variables 0..j-1; pick x_0, x_1, ... in turn
    x = [Fraction(0)] * n
    for j in range(n):
        lo, hi = None, None
        for coefs, rhs in levels[n - 1 - j].items():
            c = coefs[j]
            if c == 0:
                continue
            rest = sum(coefs[i] * x[i] for i in range(j))
            bound = (rhs - rest) / c
            if c > 0:
                hi = bound if hi is None else min(hi, bound)
            else:
                lo = bound if lo is None else max(lo, bound)
        if lo is not None and hi is not None:
            if lo > hi:
                raise AssertionError("Fourier-Motzkin back-substitution found an empty interval")
            x[j] = (lo + hi) / 2
        elif lo is not None:
            x[j] = Fraction(int(lo) + 1) if lo >= 0 else Fraction(int(lo))
        elif hi is not None:
            x[j] = Fraction(int(hi) - 1) if hi <= 0 else Fraction(int(hi))
    # the weak system is scale-invariant in direction, so clear denominators
    den = lcm(*(v.denominator for v in x))
    witness = tuple(v * den for v in x)
    if not system.satisfied_by(witness):
        raise AssertionError(f"witness {witness} fails substitution")
    return Feasibility(True, witness)


# --- serialization -----------------------------------------------------------------


def fmt_rational(x: Scalar) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s: Union[str, int, Fraction]) -> Fraction:
    return Fraction(s.strip()) if isinstance(s, str) else Fraction(s)


def parse_vector(s: str) -> Tuple[Fraction, ...]:
    return tuple(parse_rational(p) for p in s.split(",") if p.strip())
