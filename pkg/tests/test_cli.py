import json
import re
import subprocess
import sys

import pytest

from greenwalk.cli import main
from golden import A4_ARROWS, A4_BRICKS, A4_CMATRICES, A4_WALK, A4_WALK_AS_WRITTEN

A4_CHAIN = "2..2,1..1,4..4,1..3,2..3,3..3"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, (json.loads(out) if out.strip() else None), err


@pytest.fixture
def a1(quiver_file):
    return quiver_file(1, [], "a1.json")


@pytest.fixture
def a2(quiver_file):
    return quiver_file(2, [(1, 2)], "a2.json")


@pytest.fixture
def a4(quiver_file):
    return quiver_file(4, A4_ARROWS, "a4.json")


def _seq(s):
    return ",".join(map(str, s))


# --- walk / bricks / enumerate ---------------------------------------------------


def test_walk_a4(capsys, a4):
    code, js, _ = run_json(capsys, "walk", "--quiver", a4, "--seq", _seq(A4_WALK))
    assert code == 0 and js["maximal"]
    assert [tuple(map(tuple, m)) for m in js["states"]] == list(A4_CMATRICES)
    assert [tuple(b) for b in js["bricks"]] == list(A4_BRICKS)


def test_walk_a4_as_written_exits_2(capsys, a4):
    code, out, err = run(capsys, "walk", "--quiver", a4, "--seq", _seq(A4_WALK_AS_WRITTEN))
    assert code == 2 and out == ""
    assert "step index 3" in err and "vertex 1" in err


def test_walk_a1_one_step(capsys, a1):
    code, js, _ = run_json(capsys, "walk", "--quiver", a1, "--seq", "1")
    assert code == 0 and js["steps"] == [1] and js["maximal"]
    assert js["states"][-1] == [[-1]] and js["bricks"] == [[1]]


def test_walk_a2_repeat_exits_2(capsys, a2):
    assert run(capsys, "walk", "--quiver", a2, "--seq", "2,2")[0] == 2


def test_bricks(capsys, a4):
    code, js, _ = run_json(capsys, "bricks", "--quiver", a4, "--seq", _seq(A4_WALK))
    assert code == 0 and [tuple(b) for b in js["bricks"]] == list(A4_BRICKS)


def test_enumerate(capsys, a2, quiver_file):
    code, js, _ = run_json(capsys, "enumerate", "--quiver", a2, "--lengths")
    assert code == 0 and js["count"] == 2 and not js["truncated"]
    assert js["walks"] == [[1, 2, 1], [2, 1]] and js["lengths"] == {"2": 1, "3": 1}
    a3 = quiver_file(3, [(1, 2), (2, 3)])
    code, js, _ = run_json(capsys, "enumerate", "--quiver", a3, "--limit", "3")
    assert code == 0 and js["count"] == 3 and js["truncated"]


def test_enumerate_overlong_branch_exits_4(capsys, quiver_file):
    kron = quiver_file(2, [(1, 2), (1, 2)], "kronecker.json")
    assert run(capsys, "enumerate", "--quiver", kron, "--max-len", "10")[0] == 4


def test_enumerate_cyclic_is_rejected(capsys, quiver_file):
    cyc = quiver_file(3, [(1, 2), (2, 3), (3, 1)])
    assert run(capsys, "enumerate", "--quiver", cyc)[0] == 1


# --- parse errors --------------------------------------------------------------


@pytest.mark.parametrize(
    "argv",
    [
        ["walk", "--quiver", "/nonexistent.json", "--seq", "1"],
        ["walk", "--quiver", "{a2}", "--seq", "1,x"],
        ["walk", "--quiver", "{a2}", "--seq", "3"],
        ["walk", "--quiver", "{bad}", "--seq", "1"],
        ["check-crossing", "--bricks", "1,0;1"],
        ["check-crossing", "--bricks", "1,0;0,1", "--beta", "1,0"],
        ["oracle", "hn", "--typeA", "1>3", "--module", "1..1", "--alpha", "0"],
        ["oracle", "verify-induction", "--typeA", "1>2", "--chain", "1..1,2..2", "--alpha", "0,1"],
        ["no-such-command"],
        [],
    ],
)
def test_parse_errors_exit_1(capsys, tmp_path, a2, argv):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "arrows": [[1, 1]]}')
    argv = [a.format(a2=a2, bad=bad) for a in argv]
    assert run(capsys, *argv)[0] == 1


def test_help_exits_0(capsys):
    assert run(capsys, "--help")[0] == 0


# --- crossing --------------------------------------------------------------------


def test_check_crossing_a4(capsys, a4):
    code, js, _ = run_json(capsys, "check-crossing", "--quiver", a4, "--seq", _seq(A4_WALK), "--alpha", "2,1,20,3")
    assert code == 0 and js["verdict"] == "feasible"
    assert js["alpha_check"] == {"alpha": ["2", "1", "20", "3"], "verified": True}
    assert js["beta"] == ["1", "1", "1", "1"] and len(js["rows"]) == 5
    assert all(re.fullmatch(r"-?\d+(/\d+)?", x) for x in js["alpha"])
    assert all(isinstance(x, int) for r in js["rows"] for x in r)


def test_check_crossing_single_brick(capsys):
    code, js, _ = run_json(capsys, "check-crossing", "--bricks", "0,1")
    assert code == 0 and js["alpha"] == ["0", "0"] and js["rows"] == []


def test_check_crossing_infeasible_exits_3(capsys):
    code, js, _ = run_json(capsys, "check-crossing", "--bricks", "1,0;0,1;1,0", "--beta-sweep", "1,2;3,1")
    assert code == 3 and js["verdict"] == "infeasible_for_given_beta" and "alpha" not in js
    assert len(js["betas_tried"]) == 3


def test_check_crossing_bricks_file(capsys, tmp_path):
    f = tmp_path / "b.json"
    f.write_text(json.dumps({"bricks": [list(b) for b in A4_BRICKS]}))
    assert run(capsys, "check-crossing", "--bricks", str(f))[0] == 0
    f.write_text(json.dumps([list(b) for b in A4_BRICKS]))
    assert run(capsys, "check-crossing", "--bricks", str(f))[0] == 0


def test_charge_verify(capsys, a4):
    code, js, _ = run_json(capsys, "charge-verify", "--quiver", a4, "--seq", _seq(A4_WALK), "--alpha", "2,1,20,3")
    assert code == 0 and js["verified"]
    assert js["cot"] == ["1", "2", "3", "23/3", "21/2", "20"]
    code, js, _ = run_json(capsys, "charge-verify", "--bricks", "1,0;0,1", "--alpha", "1,0", "--beta", "1,1")
    assert code == 3 and not js["verified"]


# --- rotate ----------------------------------------------------------------------


def test_rotate_a2_verified(capsys, a2):
    code, js, _ = run_json(capsys, "rotate", "--quiver", a2, "--bricks", "1,0;1,1;0,1")
    assert code == 0 and js["oracle"] == "verified"
    assert js["k"] == 1 and js["variant"] == "reflection"
    assert js["bricks"] == [[0, 1], [1, 1], [1, 0]]
    assert js["mutated_quiver"] == {"n": 2, "arrows": [[2, 1]]}


def test_rotate_verbatim_is_rejected_by_the_oracle(capsys, a2):
    code, js, _ = run_json(capsys, "rotate", "--quiver", a2, "--bricks", "1,0;1,1;0,1", "--variant", "verbatim")
    assert code == 0 and js["oracle"] == "rejected" and js["diagnostics"]


def test_rotate_single_brick_gives_e_k(capsys, a2):
    code, js, _ = run_json(capsys, "rotate", "--quiver", a2, "--bricks", "0,1")
    assert code == 0 and js["bricks"] == [[0, 1]] and js["k"] == 2


def test_rotate_from_a_walk(capsys, a4):
    code, js, _ = run_json(capsys, "rotate", "--quiver", a4, "--seq", _seq(A4_WALK))
    # mu_2 of the linear A4 quiver has a 3-cycle, so there is no oracle to consult
    assert code == 0 and js["k"] == 2 and js["oracle"] == "not_applicable"


@pytest.mark.parametrize(
    "extra",
    [
        ["--bricks", "1,1;1,0"],
        ["--bricks", "0,1;1,0", "--k", "1"],
        ["--bricks", "1,0;1,1;0,1", "--alpha", "0,1"],
    ],
)
def test_rotate_preconditions_exit_5(capsys, a2, extra):
    assert run(capsys, "rotate", "--quiver", a2, *extra)[0] == 5


# --- oracle ----------------------------------------------------------------------


def test_oracle_torsion_lattice(capsys):
    code, js, _ = run_json(capsys, "oracle", "torsion-lattice", "--typeA", "1>2")
    assert code == 0 and len(js["classes"]) == 5 and js["maximal_chains"] == 2
    code, out, _ = run(capsys, "oracle", "torsion-lattice", "--typeA", "1>2", "--format", "dot")
    assert code == 0 and out.startswith("digraph") and out.count("->") == 5


def test_oracle_enumerate_mgs(capsys):
    code, js, _ = run_json(capsys, "oracle", "enumerate-mgs", "--typeA", "1>2,2>3")
    assert code == 0 and js["count"] == 9
    code, js, _ = run_json(capsys, "oracle", "enumerate-mgs", "--typeA", "1>2,2>3", "--limit", "2")
    assert js["count"] == 2


def test_oracle_verify_cfho(capsys):
    assert run_json(capsys, "oracle", "verify-cfho", "--typeA", "1>2", "--bricks", "1..1,1..2,2..2")[1]["cfho"]
    code, js, _ = run_json(capsys, "oracle", "verify-cfho", "--typeA", "1>2", "--bricks", "2..2,1..1,1..2")
    assert code == 0 and not js["cfho"] and js["diagnostics"]


def test_oracle_hn(capsys):
    # arrows act as V_1 -> V_2, so S_2 is the socle of [1,2]; it destabilizes when its phase is higher
    code, js, _ = run_json(capsys, "oracle", "hn", "--typeA", "1>2", "--module", "1..2", "--alpha", "1,0", "--beta", "1,1")
    assert code == 0 and js["steps"] == [[0, 1], [1, 1]] and js["cot"] == ["0", "1"]
    code, js, _ = run_json(capsys, "oracle", "hn", "--typeA", "1>2", "--module", "1..2", "--alpha", "0,1", "--beta", "1,1")
    assert code == 0 and js["steps"] == [[1, 1]] and js["cot"] == ["1/2"]
    code, js, _ = run_json(capsys, "oracle", "hn", "--typeA", "1>2", "--module", "1..1,2..2", "--alpha", "0,1")
    assert js["steps"] == [[1, 0], [1, 1]]


def test_oracle_verify_induction(capsys):
    argv = ["oracle", "verify-induction", "--typeA", "1>2,2>3,3>4", "--chain", A4_CHAIN, "--alpha", "2,1,20,3", "--beta", "1,1,1,1"]
    code, js, _ = run_json(capsys, *argv)
    assert code == 0 and js["induced"] and js["stables_equal_bricks"]
    assert sorted(js["stables"]) == sorted(A4_CHAIN.split(","))
    argv[-3] = "3,1,20,2"
    assert not run_json(capsys, *argv)[1]["induced"]


def test_oracle_cmatrices(capsys):
    code, js, _ = run_json(capsys, "oracle", "cmatrices", "--typeA", "1>2")
    assert code == 0 and len(js["pairs"]) == 5
    assert js["pairs"][0]["c"] == [[-1, 0], [0, -1]] and js["pairs"][0]["pair"] == {"M": [], "P": [1, 2]}
    assert js["pairs"][-1]["g"] == [[1, 0], [0, 1]]


def test_oracle_bound_exits_4(capsys, monkeypatch):
    assert run(capsys, "oracle", "torsion-lattice", "--typeA", "1>2,2>3,3>4,4>5,5>6")[0] == 4
    monkeypatch.setenv("GREENWALK_MAX_N", "2")
    assert run(capsys, "oracle", "hn", "--typeA", "1>2,2>3", "--module", "1..1", "--alpha", "0,0,0")[0] == 4
    assert run(capsys, "oracle", "cmatrices", "--typeA", "1>2")[0] == 0


# --- output properties ----------------------------------------------------------


def test_float_flag(capsys, a4):
    code, js, _ = run_json(capsys, "charge-verify", "--quiver", a4, "--seq", _seq(A4_WALK), "--alpha", "2,1,20,3", "--float")
    assert code == 0 and js["cot"][3] == pytest.approx(23 / 3) and "not authoritative" in js["float_output"]
    code, js2, _ = run_json(capsys, "--float", "charge-verify", "--quiver", a4, "--seq", _seq(A4_WALK), "--alpha", "2,1,20,3")
    assert js2 == js


def test_output_is_byte_identical_across_processes(a4):
    cmds = [
        ["check-crossing", "--quiver", a4, "--seq", _seq(A4_WALK)],
        ["oracle", "torsion-lattice", "--typeA", "1>2,2<3", "--format", "dot"],
        ["oracle", "enumerate-mgs", "--typeA", "1<2,2>3"],
    ]
    for argv in cmds:
        outs = [
            subprocess.run([sys.executable, "-m", "greenwalk.cli", *argv], capture_output=True, check=True).stdout
            for _ in range(2)
        ]
        assert outs[0] == outs[1] and outs[0]
