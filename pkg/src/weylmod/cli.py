"""Command-line interface.

Exit codes: 0 success, 1 domain error or failed verification, 2 usage error.
Node indices in all output are 1-based; large integers are decimal strings.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .characters import weyl_dim
from .classify import (A1Coefficient, EndSumBase, FundamentalBase, LeviRestrict, OracleBase,
                       classify_mt, classify_qm, qm_bruteforce)
from .errors import InvalidInputError, WeylmodError
from .jantzen import jantzen_sum, prime_bound, reducible_primes, two_factor_dim_L
from .killing import classify_killing, parse_quotient
from .rootsys import (RootSystemType, build, dual_coxeter_number, highest_root,
                      highest_short_root, weyl_group_order)
from .verify import run_checks, summary_dict
from .weights import minuscule_below, minuscule_weights


def _type_arg(text: str) -> RootSystemType:
    try:
        return RootSystemType.parse(text)
    except InvalidInputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _weight_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"weight must be a comma list of integers, got {text!r}") from None


def _quotient_arg(text: str):
    try:
        return parse_quotient(text)
    except InvalidInputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _w(lam) -> list[int]:
    return [int(x) for x in lam]


def _step_json(step) -> dict:
    if isinstance(step, LeviRestrict):
        return {"kind": "levi-restrict", "nodes": [i + 1 for i in step.nodes],
                "type": str(step.type), "weight": _w(step.weight), "tag": "levi-restriction"}
    if isinstance(step, A1Coefficient):
        return {"kind": "a1-coefficient", "node": step.node + 1, "d": step.d,
                "prime": step.prime, "tag": step.tag}
    if isinstance(step, FundamentalBase):
        return {"kind": "fundamental-base", "type": str(step.type), "node": step.node + 1,
                "prime": step.prime, "tag": step.tag}
    if isinstance(step, EndSumBase):
        return {"kind": "end-sum-base", "type": str(step.type), "prime": step.prime, "tag": step.tag}
    if isinstance(step, OracleBase):
        return {"kind": "oracle-base", "type": str(step.type), "weight": _w(step.weight),
                "prime": step.prime, "tag": step.tag}
    raise TypeError(step)


def _virtual_json(vc) -> list[dict]:
    return [{"weight": _w(w), "coeff": c} for w, c in vc.items()]


def cmd_dim(args) -> dict:
    rs = build(args.type)
    return {"type": str(rs.type), "weight": _w(args.weight), "dim": str(weyl_dim(rs, args.weight))}


def cmd_minuscule(args) -> dict:
    rs = build(args.type)
    out = {"type": str(rs.type), "minuscule": [_w(w) for w in sorted(minuscule_weights(rs))]}
    if args.below is not None:
        out["below"] = {"weight": _w(args.below), "minuscule": _w(minuscule_below(rs, args.below))}
    return out


def cmd_classify(args) -> dict:
    rs = build(args.type)
    v = classify_mt(rs, args.weight)
    out = {"type": str(rs.type), "weight": _w(args.weight),
           "globally_irreducible": v.globally_irreducible}
    if v.globally_irreducible:
        out["reason"] = v.reason.value
    else:
        out["witness_prime"] = v.witness_prime
        out["chain"] = [_step_json(s) for s in v.chain]
    return out


def cmd_jantzen(args) -> dict:
    rs = build(args.type)
    rep = jantzen_sum(rs, args.weight, args.prime)
    out = {"type": str(rs.type), "weight": _w(args.weight), "prime": args.prime,
           "irreducible": rep.irreducible, "sum": _virtual_json(rep.sum),
           "terms": len(rep.term_log)}
    dim_l = two_factor_dim_L(rs, rep)
    if dim_l is not None:
        out["dim_V"] = str(weyl_dim(rs, args.weight))
        out["dim_L"] = str(dim_l)
    if args.log:
        out["term_log"] = [
            {"root": _w(t.root.simple_coords), "m": t.m, "valuation": t.valuation,
             "chi": None if t.chi is None else {"sign": t.chi[0], "weight": _w(t.chi[1])}}
            for t in rep.term_log]
    return out


def cmd_primes(args) -> dict:
    rs = build(args.type)
    bad = reducible_primes(rs, args.weight)
    return {"type": str(rs.type), "weight": _w(args.weight), "prime_bound": prime_bound(rs, args.weight),
            "reducible_primes": bad, "globally_irreducible": not bad}


def cmd_killing(args) -> dict:
    v = classify_killing(args.spec)
    lat = v.lattice
    return {"group": str(args.spec), "ambient": str(lat.ambient.type), "basis": list(lat.labels),
            "gram": [[str(x) for x in row] for row in lat.gram], "det": str(lat.det),
            "e": str(lat.e_factor), "scaled_det": str(lat.scaled_det),
            "discriminant": str(v.discriminant),
            "globally_nondegenerate": v.globally_nondegenerate,
            "degenerate_primes": list(v.degenerate_primes)}


def cmd_qm(args) -> dict:
    rs = build(args.type)
    case = classify_qm(rs, args.weight)
    return {"type": str(rs.type), "weight": _w(args.weight),
            "case": None if case is None else case.value,
            "all_proper_levis_irreducible": qm_bruteforce(rs, args.weight)}


def cmd_root_info(args) -> dict:
    rs = build(args.type)
    return {"type": str(rs.type), "rank": rs.rank, "cartan": [list(r) for r in rs.cartan],
            "cartan_det": rs.cartan_determinant, "positive_roots": len(rs.positive_roots),
            "weyl_group_order": str(weyl_group_order(rs)),
            "dual_coxeter_number": dual_coxeter_number(rs),
            "highest_root": _w(highest_root(rs).weight_coords),
            "highest_short_root": _w(highest_short_root(rs).weight_coords),
            "minuscule": [_w(w) for w in sorted(minuscule_weights(rs))]}


def _render_text(data, indent=0) -> list[str]:
    pad = " " * indent
    lines = []
    width = max((len(k) for k in data), default=0)
    for k, v in data.items():
        if isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{k}:")
            for item in v:
                lines.append(pad + "  - " + ", ".join(f"{a}={json.dumps(b)}" for a, b in item.items()))
        elif isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.extend(_render_text(v, indent + 2))
        else:
            shown = v if isinstance(v, str) else json.dumps(v)
            lines.append(f"{pad}{k.ljust(width)}  {shown}")
    return lines


def _emit(data: dict, as_json: bool):
    if as_json:
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        print("\n".join(_render_text(data)))


def cmd_verify(args) -> int:
    results = run_checks(args.max_rank, args.dim_cap, args.threads)
    summary = summary_dict(results, args.max_rank, args.dim_cap, timings=args.timings)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(summary, fh, sort_keys=True, indent=2)
            fh.write("\n")
    if args.json:
        print(json.dumps(summary, sort_keys=True, indent=2))
    else:
        width = max(len(r.id) for r in results)
        for r in results:
            line = f"{r.status.upper():7} {r.id.ljust(width)}  {r.cases:6d} cases  {r.title}"
            if args.timings:
                line += f"  [{r.seconds:.2f}s]"
            print(line)
            for f in r.failures[:5]:
                print(f"        ! {f}")
        print("ALL PASSED" if summary["passed"] else "FAILED")
    return 0 if summary["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weylmod", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, weight=True):
        p = sub.add_parser(name, help=help_)
        p.add_argument("type", type=_type_arg, help="root system type, e.g. B4")
        if weight:
            p.add_argument("weight", type=_weight_arg, help="comma list in fundamental-weight basis")
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(func=func)
        return p

    add("dim", cmd_dim, "Weyl dimension of V(lambda)")
    p = add("minuscule", cmd_minuscule, "minuscule weights", weight=False)
    p.add_argument("--below", type=_weight_arg, help="report the minuscule weight in this weight's coset")
    add("classify", cmd_classify, "global irreducibility verdict with witness chain")
    p = add("jantzen", cmd_jantzen, "Jantzen sum at one prime")
    p.add_argument("prime", type=int)
    p.add_argument("--log", action="store_true", help="include every term of the sum")
    add("primes", cmd_primes, "all primes at which V(lambda) is reducible")
    add("qm", cmd_qm, "irreducibility of all proper Levi restrictions")
    add("root-info", cmd_root_info, "root system data", weight=False)

    p = sub.add_parser("killing", help="reduced Killing form discriminant")
    p.add_argument("spec", type=_quotient_arg,
                   help="E8 (simply connected), ad:E6, SO10, HSpin16 or SL8/mu2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_killing)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--max-rank", type=int, default=4, choices=range(1, 9), metavar="{1..8}")
    p.add_argument("--dim-cap", type=int, default=5000)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", help="also write the JSON report to this path")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings")
    p.set_defaults(func=None)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        if args.threads < 1 or args.dim_cap < 1:
            parser.error("--threads and --dim-cap must be positive")
        return cmd_verify(args)
    try:
        data = args.func(args)
    except WeylmodError as exc:
        print(json.dumps({"error": {"kind": type(exc).__name__, "message": str(exc)}}, sort_keys=True))
        return 1
    _emit(data, args.json)
    return 0


if __name__ == "__main__":
    sys.exit(main())
