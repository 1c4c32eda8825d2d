from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from greenwalk.charge import (
    CentralCharge,
    Cmp,
    Phase,
    build_crossing_system,
    eval_charge,
    phase_cmp,
    solve_crossing,
    verify_charge_order,
)
from greenwalk.cluster import BrickSeq, Quiver, bricks_of_walk, enumerate_mgs
from golden import A4_ALPHA, A4_BETA, A4_BRICKS

Z = CentralCharge(A4_ALPHA, A4_BETA)
A4_SEQ = BrickSeq(4, A4_BRICKS)


def test_charge_validation():
    with pytest.raises(ValueError):
        CentralCharge((1, 2), (1, 0))
    with pytest.raises(ValueError):
        eval_charge(Z, (0, 0, 0, 0))
    with pytest.raises(ValueError):
        eval_charge(Z, (1, 0))
    with pytest.raises(ValueError):
        eval_charge(Z, (1, -1, 0, 0))


def test_cot_values():
    assert eval_charge(Z, (0, 1, 0, 0)).cot == 1
    assert eval_charge(Z, (1, 1, 1, 0)).cot == Fraction(23, 3)
    for i in range(4):
        e = tuple(int(i == j) for j in range(4))
        assert eval_charge(Z, e).cot == Fraction(A4_ALPHA[i], A4_BETA[i])


def test_phase_comparison():
    e1, e2 = (1, 0, 0, 0), (0, 1, 0, 0)
    assert phase_cmp(Z, e1, e1) is Cmp.EQUAL
    assert phase_cmp(Z, e2, e1) is Cmp.GREATER  # cot 1 < cot 2
    assert eval_charge(Z, e2) > eval_charge(Z, e1)
    assert Phase(Fraction(1), Fraction(2)) == Phase(Fraction(2), Fraction(4))
    assert hash(Phase(Fraction(1), Fraction(2))) == hash(Phase(Fraction(2), Fraction(4)))


vec = st.lists(st.integers(0, 6), min_size=3, max_size=3).filter(any)
alpha3 = st.lists(st.integers(-10, 10), min_size=3, max_size=3)
beta3 = st.lists(st.integers(1, 10), min_size=3, max_size=3)


@given(alpha3, beta3, vec, vec)
def test_additivity(a, b, v, w):
    z = CentralCharge(a, b)
    s = tuple(x + y for x, y in zip(v, w))
    pv, pw, ps = eval_charge(z, v), eval_charge(z, w), eval_charge(z, s)
    assert ps.cot_num == pv.cot_num + pw.cot_num
    assert ps.cot_den == pv.cot_den + pw.cot_den


@given(alpha3, beta3, vec, vec)
def test_see_saw(a, b, v, w):
    z = CentralCharge(a, b)
    pv, pw = eval_charge(z, v), eval_charge(z, w)
    ps = eval_charge(z, tuple(x + y for x, y in zip(v, w)))
    assert min(pv, pw) <= ps <= max(pv, pw)
    assert (pv == pw) == (ps == pv == pw)


@given(alpha3, beta3, vec, vec)
def test_phase_cmp_matches_cot_order(a, b, v, w):
    z = CentralCharge(a, b)
    cv, cw = eval_charge(z, v).cot, eval_charge(z, w).cot
    expected = Cmp.EQUAL if cv == cw else (Cmp.GREATER if cv < cw else Cmp.LESS)
    assert phase_cmp(z, v, w) is expected


def test_a4_system_matches_the_printed_chain():
    # x2 < x1 < x4 < (x1+x2+x3)/3 < (x2+x3)/2 < x3
    sysm = build_crossing_system(A4_SEQ, A4_BETA)
    assert sysm.rows == ((-1, 1, 0, 0), (1, 0, 0, -1), (-1, -1, -1, 3), (2, -1, -1, 0), (0, 1, -1, 0))


def test_row_definition_before_canonicalization():
    beta = (1, 2, 3, 1)
    sysm = build_crossing_system(A4_SEQ, beta)
    for row, (n, m) in zip(sysm.rows, zip(A4_BRICKS, A4_BRICKS[1:])):
        raw = [sum(b * x for b, x in zip(beta, m)) * p - sum(b * x for b, x in zip(beta, n)) * q for p, q in zip(n, m)]
        ratio = {Fraction(r, x) for r, x in zip(raw, row) if x}
        assert len(ratio) == 1 and ratio.pop() > 0
        assert all((r == 0) == (x == 0) for r, x in zip(raw, row))


def test_trivial_systems():
    assert build_crossing_system(BrickSeq(2, ((1, 0),)), (1, 1)).rows == ()
    assert build_crossing_system(BrickSeq(2, ((1, 0), (0, 1), (1, 0))), (1, 1)).rows == ((1, -1), (-1, 1))


def test_solve_a4():
    rep = solve_crossing(A4_SEQ)
    assert rep.feasible and rep.verdict == "feasible"
    assert verify_charge_order(rep.alpha, rep.beta_used, A4_SEQ)
    assert verify_charge_order(A4_ALPHA, A4_BETA, A4_SEQ)
    js = rep.to_json()
    assert set(js) == {"bricks", "beta", "rows", "verdict", "alpha"}
    assert js["beta"] == ["1", "1", "1", "1"]


def test_solve_infeasible_and_single():
    rep = solve_crossing(BrickSeq(2, ((1, 0), (0, 1), (1, 0))))
    assert not rep.feasible and rep.verdict == "infeasible_for_given_beta"
    assert "alpha" not in rep.to_json()
    one = solve_crossing(BrickSeq(2, ((1, 0),)))
    assert one.feasible and tuple(one.alpha) == (0, 0)


def test_beta_sweep_records_attempts():
    rep = solve_crossing(BrickSeq(2, ((1, 0), (0, 1), (1, 0))), beta_sweep=[(1, 2), (2, 1)])
    assert not rep.feasible and len(rep.betas_tried) == 3
    assert len(rep.to_json()["betas_tried"]) == 3


def test_verify_order_edge_cases():
    assert not verify_charge_order((0, 0, 0, 0), A4_BETA, A4_SEQ)
    assert verify_charge_order((0, 0), (1, 1), BrickSeq(2, ((1, 0),)))


def test_every_a2_sequence_is_feasible_and_grid_confirms():
    for w in enumerate_mgs(Quiver(2, ((1, 2),))).walks:
        bricks = bricks_of_walk(w)
        rep = solve_crossing(bricks)
        assert rep.feasible
        grid = [(Fraction(p, q), Fraction(r, s)) for p in range(-8, 9) for q in (1, 2) for r in range(-8, 9) for s in (1, 2)]
        assert any(verify_charge_order(a, (1, 1), bricks) for a in grid)


@given(st.lists(st.integers(-20, 20), min_size=4, max_size=4))
def test_witness_soundness_on_random_charges(alpha):
    # a sequence ordered by some charge is always found feasible for that beta
    z = CentralCharge(alpha, A4_BETA)
    dims = sorted(A4_BRICKS, key=lambda d: eval_charge(z, d).cot)
    if len({eval_charge(z, d) for d in dims}) < len(dims):
        return
    rep = solve_crossing(BrickSeq(4, dims))
    assert rep.feasible and verify_charge_order(rep.alpha, A4_BETA, BrickSeq(4, dims))
