"""Command-line front end.

    thomschur fir 4 1
    thomschur solve A3 2
    thomschur verify --candidate "S_{1111}+9S_{112}+26S_{13}+24S_4" A4 1
    thomschur identity FBr 3 2
    thomschur expand --nvars 3 "c1^2 + c2"

Exit status: 0 success, 1 a check or probe failed, 2 usage error,
3 the solver could not produce a unique integral answer.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import thom
from .linalg import Inconsistent, Underdetermined
from .polyring import ParseError, parse_poly
from .schurcalc import identity_grid, parse_expansion

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CONTRACT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _singularity(text: str) -> int:
    mt = re.fullmatch(r"A_?(\d+)", text.strip())
    if not mt:
        raise argparse.ArgumentTypeError(f"expected A1, A2, A3 or A4, got {text!r}")
    return int(mt.group(1))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--quiet", action="store_true", help="print nothing; exit status only")

    ap = argparse.ArgumentParser(prog="thomschur", description=__doc__.split("\n\n")[0],
                                 parents=[common])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fir", parents=[common], help="Schur expansion of F^(i)_r")
    p.add_argument("i", type=_positive)
    p.add_argument("r", type=_positive)

    p = sub.add_parser("solve", parents=[common], help="solve the restriction equations of A_i(r)")
    p.add_argument("singularity", type=_singularity)
    p.add_argument("r", type=_positive)
    p.add_argument("--all-partitions", action="store_true",
                   help="use every partition of weight i*r as unknowns")

    p = sub.add_parser("verify", parents=[common], help="check a candidate against the probes of A_i(r)")
    p.add_argument("--candidate", required=True, help='e.g. "S_{11} + 2S_2"')
    p.add_argument("singularity", type=_singularity)
    p.add_argument("r", type=_positive)

    p = sub.add_parser("identity", parents=[common], help="exact identity checks")
    p.add_argument("name", choices=["FBr", "CF", "fid", "chern", "cancel", "dual", "vanish", "factor", "rect"])
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--seed", type=int, default=0, help="seed for random letters (grid checks)")

    p = sub.add_parser("expand", parents=[common], help="Schur expansion of a symmetric polynomial")
    p.add_argument("--nvars", type=_positive, required=True)
    p.add_argument("expr", help="polynomial in x1..xN, or in c1, c2, ... read as complete functions")

    p = sub.add_parser("probes", parents=[common], help="list the probe arguments for A_i(r)")
    p.add_argument("singularity", type=_singularity)
    p.add_argument("r", type=_positive)
    return ap


# -- commands ---------------------------------------------------------------------

def cmd_fir(args):
    E = thom.F_ir(args.i, args.r)
    if args.json:
        return EXIT_OK, json.dumps({"i": args.i, "r": args.r, "expansion": E.to_json()})
    return EXIT_OK, E.render()


def cmd_solve(args):
    res = thom.solve_thom(args.singularity, args.r, all_partitions=args.all_partitions)
    res.singularity = f"A{args.singularity}"
    if args.json:
        return EXIT_OK, json.dumps(res.to_json())
    return EXIT_OK, res.expansion.render(args.r)


def cmd_verify(args):
    cand = parse_expansion(args.candidate)
    probes = thom.probes_for(args.singularity, args.r)
    res = thom.verify_thom(cand, probes, args.r, f"A{args.singularity}")
    status = EXIT_OK if res.passed else EXIT_FAIL
    if args.json:
        data = res.to_json()
        data["failures"] = {k: str(v) for k, v in res.failures.items()}
        return status, json.dumps(data)
    lines = [f"PASS {name}" for name in res.verified_against]
    lines += [f"FAIL {name}: residual {res_}" for name, res_ in res.failures.items()]
    return status, "\n".join(lines)


def _ints(params, n_min, n_max, usage, lowest=1):
    if not n_min <= len(params) <= n_max or any(v < lowest for v in params):
        raise UsageError(f"usage: identity {usage}")
    return params


def cmd_identity(args):
    name, ps = args.name, args.params
    if name == "FBr":
        i, r = _ints(ps, 2, 2, "FBr <i> <r>")
        reports = [thom.check_FBr(i, r)]
    elif name == "CF":
        ps = _ints(ps, 2, 3, "CF <i> <r> [p]")
        i, r = ps[:2]
        pvals = [ps[2]] if len(ps) == 3 else range(1, i + 2)
        if any(p > i + 1 for p in pvals):
            raise UsageError("need p <= i+1")
        reports = [thom.check_CF(i, r, p) for p in pvals]
    elif name == "fid":
        i, k = _ints(ps, 2, 2, "fid <i> <k>", lowest=0)
        if i < 1:
            raise UsageError("i must be positive")
        reports = [thom.check_fid(i, k)]
    elif name == "chern":
        i, r = _ints(ps, 2, 2, "chern <i> <r>")
        reports = thom.chern_crosscheck(i, r)
    else:
        ps = _ints(ps, 0, 2, f"{name} [max_weight] [max_size]", lowest=0)
        max_weight = ps[0] if ps else (8 if name == "vanish" else 5)
        max_size = ps[1] if len(ps) > 1 else 3
        reports = identity_grid(name, max_size, max_weight, args.seed)
    ok = all(reports)
    if args.json:
        out = json.dumps([{"name": r.name, "passed": r.passed, "detail": r.detail} for r in reports])
    else:
        out = "\n".join(r.line() for r in reports)
    return (EXIT_OK if ok else EXIT_FAIL), out


def cmd_expand(args):
    N = args.nvars
    p = parse_poly(args.expr)
    cvars = sorted(v for v in p.variables if v.startswith("c"))
    if cvars:
        subs = {}
        for v in cvars:
            k = int(v[1:] or 0)
            if k < 1:
                raise UsageError(f"bad variable {v}: use c1, c2, ...")
            subs[v] = thom.complete_in_variables(k, N)
        p = p.substitute(subs)
    E = thom.schur_expand(p, N)
    if args.json:
        return EXIT_OK, json.dumps(E.to_json())
    return EXIT_OK, E.render()


def cmd_probes(args):
    probes = thom.probes_for(args.singularity, args.r)
    if args.json:
        return EXIT_OK, json.dumps([{"name": p.name, "arg": p.arg.render(), "rhs": str(p.rhs)} for p in probes])
    return EXIT_OK, "\n".join(f"{p.name}: P({p.arg.render()}) = {p.rhs}" for p in probes)


COMMANDS = {
    "fir": cmd_fir,
    "solve": cmd_solve,
    "verify": cmd_verify,
    "identity": cmd_identity,
    "expand": cmd_expand,
    "probes": cmd_probes,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        status, out = COMMANDS[args.command](args)
    except (UsageError, ParseError, thom.NotInCatalog) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) else str(exc)
        print(f"thomschur: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except (Underdetermined, Inconsistent, thom.NonIntegerSolution, thom.NotSymmetric,
            AssertionError, ValueError) as exc:
        print(f"thomschur: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    if not args.quiet and out:
        print(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
