"""Command-line front end.

Exit codes:
  0  ok / feasible
  1  parse error (bad file, bad vector, bad module spec)
  2  non-green step in a walk
  3  crossing system infeasible for the given beta (or a charge that fails to order the bricks)
  4  budget or oracle bound exceeded
  5  rotation precondition failed
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import cluster
from .charge import CentralCharge, solve_crossing, verify_charge_order
from .cluster import BrickSeq, Quiver
from .errors import BoundExceeded, BudgetExceeded, FirstBrickNotSimpleAtK, NonGreenStep, RotationError
from .ratlin import fmt_rational, parse_vector

EXIT_OK, EXIT_PARSE, EXIT_NONGREEN, EXIT_INFEASIBLE, EXIT_BUDGET, EXIT_ROTATION = range(6)


class ParseError(Exception):
    pass


# --- input helpers ----------------------------------------------------------------


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _load_quiver(path: str) -> Quiver:
    data = _read_json(path)
    try:
        return Quiver.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"{path}: not a quiver ({exc})") from exc


def _ints(text: str) -> List[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from exc


def _vector(text: str, n: Optional[int] = None):
    try:
        v = parse_vector(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational vector {text!r}") from exc
    if not v or (n is not None and len(v) != n):
        raise ParseError(f"vector {text!r} should have {n} entries")
    return v


def _positive(v, what: str):
    if any(x <= 0 for x in v):
        raise ParseError(f"{what} must be strictly positive")
    return v


def _bricks(text: str) -> BrickSeq:
    """A JSON file holding a list of dimension vectors, or inline ``"1,0;1,1"``."""
    try:
        if ";" in text or re.fullmatch(r"[\d,\s]+", text):
            data = [_ints(part) for part in text.split(";")]
        else:
            data = _read_json(text)
            if isinstance(data, dict):
                data = data["bricks"]
        return BrickSeq.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed bricks: {exc}") from exc


def _type_a(spec: str):
    from .repkit.typea import TypeAQuiver

    try:
        return TypeAQuiver.parse(spec)
    except (ValueError, IndexError) as exc:
        raise ParseError(f"bad type-A spec {spec!r}: {exc}") from exc


def _modules(q, text: str):
    from .repkit.typea import ThinModule

    try:
        return [ThinModule.parse(q, p.strip()) for p in text.split(",") if p.strip()]
    except (ValueError, TypeError) as exc:
        raise ParseError(f"bad module list {text!r}: {exc}") from exc


# --- output -----------------------------------------------------------------------

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


def _floatify(obj):
    if isinstance(obj, dict):
        return {k: _floatify(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_floatify(v) for v in obj]
    if isinstance(obj, str) and _RATIONAL.match(obj):
        return float(Fraction(obj))
    return obj


def _emit(obj, args) -> None:
    if getattr(args, "float", False) and isinstance(obj, dict):
        obj = dict(_floatify(obj))
        obj["float_output"] = "approximate decimal rendering; not authoritative"
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


# --- commands ---------------------------------------------------------------------


def cmd_walk(args) -> int:
    q = _load_quiver(args.quiver)
    w = cluster.run_walk(q, _ints(args.seq))
    out = w.to_json()
    out["bricks"] = cluster.bricks_of_walk(w).to_json()
    out["maximal"] = w.is_maximal
    _emit(out, args)
    return EXIT_OK


def cmd_bricks(args) -> int:
    q = _load_quiver(args.quiver)
    w = cluster.run_walk(q, _ints(args.seq))
    _emit({"bricks": cluster.bricks_of_walk(w).to_json(), "maximal": w.is_maximal}, args)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    q = _load_quiver(args.quiver)
    if not q.acyclic:
        raise ParseError("enumeration needs an acyclic quiver")
    res = cluster.enumerate_mgs(q, max_len=args.max_len, limit=args.limit)
    walks = [list(w.steps) for w in res.walks]
    out = {"count": len(walks), "truncated": res.truncated, "walks": walks}
    if args.lengths:
        hist = {}
        for w in walks:
            hist[len(w)] = hist.get(len(w), 0) + 1
        out["lengths"] = {str(k): v for k, v in sorted(hist.items())}
    _emit(out, args)
    return EXIT_OK


def _bricks_from_args(args) -> BrickSeq:
    if args.bricks:
        return _bricks(args.bricks)
    if args.quiver and args.seq:
        return cluster.bricks_of_walk(cluster.run_walk(_load_quiver(args.quiver), _ints(args.seq)))
    raise ParseError("give --bricks, or --quiver with --seq")


def cmd_check_crossing(args) -> int:
    bricks = _bricks_from_args(args)
    beta = _positive(_vector(args.beta, bricks.n), "beta") if args.beta else None
    sweep = [_positive(_vector(b, bricks.n), "beta") for b in args.beta_sweep.split(";")] if args.beta_sweep else ()
    report = solve_crossing(bricks, beta, sweep)
    out = report.to_json()
    if args.alpha:
        alpha = _vector(args.alpha, bricks.n)
        out["alpha_check"] = {
            "alpha": [fmt_rational(x) for x in alpha],
            "verified": verify_charge_order(alpha, report.beta_used, bricks),
        }
    _emit(out, args)
    return EXIT_OK if report.feasible else EXIT_INFEASIBLE


def cmd_charge_verify(args) -> int:
    bricks = _bricks_from_args(args)
    alpha = _vector(args.alpha, bricks.n)
    beta = _positive(_vector(args.beta, bricks.n), "beta") if args.beta else tuple(Fraction(1) for _ in range(bricks.n))
    z = CentralCharge(alpha, beta)
    ok = verify_charge_order(alpha, beta, bricks)
    _emit(
        {
            "alpha": [fmt_rational(x) for x in alpha],
            "beta": [fmt_rational(x) for x in beta],
            "cot": [fmt_rational(z(d).cot) for d in bricks],
            "verified": ok,
        },
        args,
    )
    return EXIT_OK if ok else EXIT_INFEASIBLE


def cmd_rotate(args) -> int:
    from .repkit.lattice import verify_cfho
    from .repkit.typea import ThinModule, TypeAQuiver

    q = _load_quiver(args.quiver)
    bricks = _bricks_from_args(args)
    if bricks.n != q.n:
        raise ParseError("bricks and quiver have different ranks")
    k = args.k
    if k is None:
        nz = [i + 1 for i, x in enumerate(bricks[0]) if x]
        if len(nz) != 1 or bricks[0][nz[0] - 1] != 1:
            raise FirstBrickNotSimpleAtK(f"first brick {bricks[0]} is not simple")
        k = nz[0]
    reflection = args.variant == "reflection"
    rotated = cluster.rotate_cfho(bricks, k, q, reflection)
    mq = cluster.mutate_quiver(q, k)
    out = {
        "k": k,
        "variant": args.variant,
        "matrix": [list(r) for r in cluster.rotation_matrix(q, k, reflection)],
        "mutated_quiver": mq.to_json(),
        "bricks": rotated.to_json(),
    }
    if args.alpha:
        beta = args.beta or ",".join("1" * q.n)
        z = cluster.rotate_charge(_vector(args.alpha, q.n), _positive(_vector(beta, q.n), "beta"), k, q, reflection)
        out["charge"] = {"alpha": [fmt_rational(x) for x in z.alpha], "beta": [fmt_rational(x) for x in z.beta]}
    ta = TypeAQuiver.from_quiver(mq)
    if ta is None:
        out["oracle"] = "not_applicable"
    else:
        try:
            mods = [ThinModule.from_dim(ta, d) for d in rotated]
            check = verify_cfho(mods)
            out["oracle"] = "verified" if check.ok else "rejected"
            if not check.ok:
                out["diagnostics"] = list(check.diagnostics)
        except ValueError as exc:
            out["oracle"] = "rejected"
            out["diagnostics"] = [str(exc)]
    _emit(out, args)
    return EXIT_OK


# --- oracle subcommands ------------------------------------------------------------


def _lattice(args):
    from .repkit.lattice import torsion_lattice

    return torsion_lattice(_type_a(args.typeA))


def cmd_oracle_lattice(args) -> int:
    from .repkit.lattice import lattice_to_dot, lattice_to_json

    lat = _lattice(args)
    if args.format == "dot":
        sys.stdout.write(lattice_to_dot(lat))
    else:
        _emit(lattice_to_json(lat), args)
    return EXIT_OK


def cmd_oracle_enumerate(args) -> int:
    from .repkit.lattice import cfho_from_chain, maximal_chains

    lat = _lattice(args)
    chains = maximal_chains(lat, args.limit)
    _emit(
        {
            "quiver": str(lat.quiver),
            "count": len(chains),
            "chains": [[str(m) for m in cfho_from_chain(lat, c)] for c in chains],
        },
        args,
    )
    return EXIT_OK


def cmd_oracle_verify_cfho(args) -> int:
    from .repkit.lattice import verify_cfho
    from .repkit.typea import check_bound

    q = _type_a(args.typeA)
    check_bound(q.n)
    check = verify_cfho(_modules(q, args.bricks))
    _emit({"cfho": check.ok, "diagnostics": list(check.diagnostics)}, args)
    return EXIT_OK


def _charge(args, n: int) -> CentralCharge:
    beta = args.beta or ",".join("1" * n)
    return CentralCharge(_vector(args.alpha, n), _positive(_vector(beta, n), "beta"))


def cmd_oracle_hn(args) -> int:
    from .repkit.hn import hn_filtration
    from .repkit.typea import check_bound

    q = _type_a(args.typeA)
    check_bound(q.n)
    mods = _modules(q, args.module)
    if not mods:
        raise ParseError("empty module")
    _emit(hn_filtration(mods, _charge(args, q.n)).to_json(), args)
    return EXIT_OK


def cmd_oracle_verify_induction(args) -> int:
    from .repkit.hn import stable_and_semistable, verify_induction
    from .repkit.lattice import mgs_from_cfho

    lat = _lattice(args)
    mods = _modules(lat.quiver, args.chain)
    try:
        chain = mgs_from_cfho(mods, lat)
    except ValueError as exc:
        raise ParseError(f"--chain is not a brick sequence of a maximal chain: {exc}") from exc
    z = _charge(args, lat.quiver.n)
    ok = verify_induction(lat, chain, z)
    stables, _ = stable_and_semistable(z, lat.quiver)
    _emit(
        {
            "induced": ok,
            "stables": [str(m) for m in stables],
            "stables_equal_bricks": set(stables) == set(mods),
        },
        args,
    )
    return EXIT_OK


def cmd_oracle_cmatrices(args) -> int:
    from .repkit.tau import tau_tilting_pairs_and_cmatrices

    lat = _lattice(args)
    data = tau_tilting_pairs_and_cmatrices(lat)
    rows = []
    for c in lat.classes:
        d = data[c.mask]
        rows.append(
            {
                "class": [str(m) for m in c.modules],
                "pair": {"M": [str(m) for m in d.pair.m_part], "P": list(d.pair.p_part)},
                "g": [[int(x) for x in r] for r in d.g],
                "c": [[int(x) for x in r] for r in d.c],
            }
        )
    _emit({"quiver": str(lat.quiver), "pairs": rows}, args)
    return EXIT_OK


# --- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="greenwalk", description="Maximal green sequences, bricks and central charges.")
    p.add_argument("--float", action="store_true", help="render rationals as decimals (non-authoritative)")
    # also accepted after the subcommand; SUPPRESS keeps a global --float from being reset
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--float", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    def quiver_seq(sp, seq_required=True):
        sp.add_argument("--quiver", required=seq_required, help='JSON file {"n": .., "arrows": [[i, j], ..]}')
        sp.add_argument("--seq", required=seq_required, help="mutation sequence, e.g. 2,1,4,3,1,2")

    def brick_source(sp):
        sp.add_argument("--bricks", help='JSON file of dimension vectors, or inline "1,0;1,1"')
        quiver_seq(sp, seq_required=False)

    sp = sub.add_parser("walk", parents=[common], help="run a green walk and print every c-matrix")
    quiver_seq(sp)
    sp.set_defaults(func=cmd_walk)

    sp = sub.add_parser("bricks", parents=[common], help="brick sequence of a green walk")
    quiver_seq(sp)
    sp.set_defaults(func=cmd_bricks)

    sp = sub.add_parser("enumerate", parents=[common], help="enumerate maximal green sequences")
    sp.add_argument("--quiver", required=True)
    sp.add_argument("--max-len", type=int, default=64)
    sp.add_argument("--limit", type=int, default=1000)
    sp.add_argument("--lengths", action="store_true", help="add a length histogram")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("check-crossing", parents=[common], help="solve the crossing inequalities for alpha")
    brick_source(sp)
    sp.add_argument("--beta", help="fixed beta (default all ones)")
    sp.add_argument("--beta-sweep", help='further betas to try, e.g. "1,2;2,1"')
    sp.add_argument("--alpha", help="also check this alpha against the chosen beta")
    sp.set_defaults(func=cmd_check_crossing)

    sp = sub.add_parser("charge-verify", parents=[common], help="check that a charge orders the bricks")
    brick_source(sp)
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--beta")
    sp.set_defaults(func=cmd_charge_verify)

    sp = sub.add_parser("rotate", parents=[common], help="rotate a brick sequence across a mutation")
    sp.add_argument("--bricks")
    sp.add_argument("--quiver", required=True)
    sp.add_argument("--seq")
    sp.add_argument("--k", type=int, help="vertex (default: support of the first brick)")
    sp.add_argument("--variant", choices=("reflection", "verbatim"), default="reflection")
    sp.add_argument("--alpha")
    sp.add_argument("--beta")
    sp.set_defaults(func=cmd_rotate)

    op = sub.add_parser("oracle", parents=[common], help="type-A module category oracle")
    osub = op.add_subparsers(dest="oracle_command", required=True)

    def type_a(sp):
        sp.add_argument("--typeA", required=True, help='orientation, e.g. "1>2,2<3"')

    sp = osub.add_parser("torsion-lattice", parents=[common])
    type_a(sp)
    sp.add_argument("--format", choices=("json", "dot"), default="json")
    sp.set_defaults(func=cmd_oracle_lattice)

    sp = osub.add_parser("enumerate-mgs", parents=[common])
    type_a(sp)
    sp.add_argument("--limit", type=int)
    sp.set_defaults(func=cmd_oracle_enumerate)

    sp = osub.add_parser("verify-cfho", parents=[common])
    type_a(sp)
    sp.add_argument("--bricks", required=True, help='intervals, e.g. "2..2,1..2,1..1"')
    sp.set_defaults(func=cmd_oracle_verify_cfho)

    sp = osub.add_parser("hn", parents=[common])
    type_a(sp)
    sp.add_argument("--module", required=True, help='interval summands, e.g. "1..2" or "1..2,2..2"')
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--beta")
    sp.set_defaults(func=cmd_oracle_hn)

    sp = osub.add_parser("verify-induction", parents=[common])
    type_a(sp)
    sp.add_argument("--chain", required=True, help="the chain's brick sequence as intervals")
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--beta")
    sp.set_defaults(func=cmd_oracle_verify_induction)

    sp = osub.add_parser("cmatrices", parents=[common])
    type_a(sp)
    sp.set_defaults(func=cmd_oracle_cmatrices)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_PARSE
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NonGreenStep as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONGREEN
    except (BoundExceeded, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except RotationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ROTATION
    except (ValueError, IndexError) as exc:
        # out-of-range vertices and similar input errors surfaced by the library
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
