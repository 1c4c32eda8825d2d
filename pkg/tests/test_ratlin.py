from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from greenwalk.ratlin import (
    StrictSystem,
    det,
    fmt_rational,
    identity,
    is_z_invertible,
    mat_mul,
    mat_vec,
    parse_rational,
    parse_vector,
    rank,
    rat_inverse,
    strict_feasible,
    transpose,
)
from golden import A4_ALPHA, A4_CMATRICES

# --- grid oracle: rationals p/q with q <= 8 and |p| <= 40, scaled by lcm(1..8) to integers
SCALE = 840
GRID = np.array(sorted({p * SCALE // q for q in range(1, 9) for p in range(-40, 41)}), dtype=np.int64)


def grid_feasible(rows, dim):
    """Exhaustive search of the rational grid; the last coordinate is solved as an interval."""
    a = np.array(rows, dtype=np.int64).reshape(len(rows), dim)
    if dim == 1:
        heads = np.zeros((1, 0), dtype=np.int64)
    else:
        mesh = np.meshgrid(*([GRID] * (dim - 1)), indexing="ij")
        heads = np.stack([m.ravel() for m in mesh], axis=1)
    rest = -(heads @ a[:, :-1].T)  # need a_last * v < rest for each row
    last = a[:, -1]
    ok = np.ones(len(heads), dtype=bool)
    lo = np.full(len(heads), -np.inf)
    hi = np.full(len(heads), np.inf)
    for i, c in enumerate(last):
        if c == 0:
            ok &= rest[:, i] > 0
        elif c > 0:
            hi = np.minimum(hi, rest[:, i] / c)
        else:
            lo = np.maximum(lo, rest[:, i] / c)
    # grid values are integers and bounds are integers or at least 1/3 away from one
    n_below_hi = np.searchsorted(GRID, hi, side="left")
    n_upto_lo = np.searchsorted(GRID, lo, side="right")
    return bool(np.any(ok & (n_below_hi > n_upto_lo)))


def test_mat_mul_identity_and_mismatch():
    c = A4_CMATRICES[4]
    assert mat_mul(identity(4), c) == c
    assert mat_mul(c, identity(4)) == c
    with pytest.raises(ValueError):
        mat_mul(identity(2), identity(3))


def test_rotation_matrix_products_by_hand():
    # linear A4, k = 1: row 1 becomes (0,1,0,0)
    b1 = ((0, 1, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    assert mat_mul(b1, b1) == b1
    # k = 3: row 3 is (0,0,0,1); entrywise B_3 (1,1,1,0) = (1, 1, 0*1+0*1+0*1+1*0, 0)
    b3 = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1), (0, 0, 0, 1))
    assert mat_vec(b3, (1, 1, 1, 0)) == (1, 1, 0, 0)


def test_inverse_and_det():
    assert rat_inverse(identity(3)) == identity(3)
    m = ((2, 1), (1, 1))
    assert rat_inverse(m) == ((1, -1), (-1, 2))
    assert det(((0, 1), (1, 0))) == -1
    with pytest.raises(ZeroDivisionError):
        rat_inverse(((1, 2), (2, 4)))
    assert rank(((1, 2), (2, 4))) == 1
    # (G^T)^-1 of the identity g-matrix is the identity
    assert rat_inverse(transpose(identity(4))) == identity(4)


def test_z_invertibility():
    assert is_z_invertible(identity(3))
    assert not is_z_invertible(((2, 0), (0, 1)))
    assert all(is_z_invertible(c) for c in A4_CMATRICES)


small = st.integers(-5, 5)


@st.composite
def square(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    return tuple(tuple(draw(small) for _ in range(n)) for _ in range(n))


@given(square())
def test_inverse_is_exact(m):
    if det(m) == 0:
        with pytest.raises(ZeroDivisionError):
            rat_inverse(m)
        return
    inv = rat_inverse(m)
    assert mat_mul(inv, m) == identity(len(m))
    assert mat_mul(m, inv) == identity(len(m))


@given(square(3), square(3))
def test_det_is_multiplicative(a, b):
    if len(a) == len(b):
        assert det(mat_mul(a, b)) == det(a) * det(b)


fractions = st.fractions(min_value=-50, max_value=50, max_denominator=30)


@given(fractions, fractions, fractions)
def test_rational_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    s = a * b + c
    assert s.denominator > 0
    from math import gcd

    assert gcd(s.numerator, s.denominator) == 1


@given(fractions)
def test_rational_round_trip(x):
    text = fmt_rational(x)
    assert parse_rational(text) == x
    assert ("/" in text) == (x.denominator != 1)


def test_parse_vector():
    assert parse_vector("1, -2/3,4") == (1, Fraction(-2, 3), 4)


# --- strict feasibility -----------------------------------------------------------------


def test_empty_system_is_feasible_with_zero_witness():
    res = strict_feasible(StrictSystem(3, ()))
    assert res.feasible and res.witness == (0, 0, 0)


def test_antisymmetric_pair_is_infeasible():
    assert not strict_feasible(StrictSystem(2, ((1, 0), (-1, 0))))


def test_zero_row_rejected():
    with pytest.raises(ValueError):
        StrictSystem(2, ((0, 0),))


def test_a4_crossing_rows():
    # x2 < x1 < x4 < (x1+x2+x3)/3 < (x2+x3)/2 < x3, each written as <alpha, d> < 0
    rows = (
        (-1, 1, 0, 0),
        (1, 0, 0, -1),
        (-1, -1, -1, 3),
        (1, -1, -1, 0),
        (0, 1, -1, 0),
    )
    sysm = StrictSystem(4, rows)
    res = strict_feasible(sysm)
    assert res.feasible and sysm.satisfied_by(res.witness)
    assert sysm.satisfied_by(A4_ALPHA)


@st.composite
def systems(draw, max_dim=3):
    dim = draw(st.integers(1, max_dim))
    m = draw(st.integers(1, 5))
    rows = []
    for _ in range(m):
        row = tuple(draw(st.integers(-3, 3)) for _ in range(dim))
        if any(row):
            rows.append(row)
    return StrictSystem(dim, tuple(rows))


@given(systems())
def test_witnesses_verify_by_substitution(sysm):
    res = strict_feasible(sysm)
    if res.feasible:
        assert all(v < 0 for v in sysm.evaluate(res.witness))


@given(systems())
def test_agrees_with_rational_grid_search(sysm):
    if not sysm.rows:
        return
    assert strict_feasible(sysm).feasible == grid_feasible(sysm.rows, sysm.dim)


@given(systems(max_dim=4))
def test_gordan_certificate_implies_infeasible(sysm):
    # Gordan: infeasible iff y >= 0, y != 0 with y^T A = 0; a found certificate refutes feasibility
    if not sysm.rows or len(sysm.rows) > 4:
        return
    res = strict_feasible(sysm)
    for y in product(range(4), repeat=len(sysm.rows)):
        if any(y) and all(sum(c * r[j] for c, r in zip(y, sysm.rows)) == 0 for j in range(sysm.dim)):
            assert not res.feasible
            return


def test_grid_oracle_sanity():
    assert grid_feasible([(1, 0)], 2)
    assert not grid_feasible([(1, 0), (-1, 0)], 2)
    assert grid_feasible([(3, -1, 0), (-1, 0, 3), (0, 1, -2)], 3) == strict_feasible(
        StrictSystem(3, ((3, -1, 0), (-1, 0, 3), (0, 1, -2)))
    ).feasible
