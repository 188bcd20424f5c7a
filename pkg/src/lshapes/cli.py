"""Command line front end: ``lshapes semigroup|mdd|family ...``.

Exit codes: 0 success, 2 invalid input, 3 a closed form disagreed with the
brute-force computation.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import __version__
from .cayley import WeightedCayleyDigraph
from .diagrams import enumerate_mdds, lshapes_apery, render
from .errors import DomainError, UnsupportedRender, VerificationError
from .factorization import factorizations, minimal_presentation
from .family import (
    build, classify_mi, construct_lshape_family, generic_lshapes,
    sabariego_santos, table1_rows, verify_all,
)
from .semigroup import NumericalSemigroup

LONG_N = 43
LONG_T = 7


def _ints(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


class UsageError(Exception):
    pass


def _diagram_output(diagrams, args, out):
    out["count"] = len(diagrams)
    if not args.count:
        if args.json:
            out["diagrams"] = [D.to_dict() for D in diagrams]
        else:
            out["diagrams"] = [render(D, args.render) for D in diagrams]


def cmd_semigroup(args) -> dict:
    S = NumericalSemigroup(args.gens)
    out = {}
    if args.frobenius:
        out["frobenius"] = S.frobenius()
    if args.pf:
        out["pseudo_frobenius"] = sorted(S.pseudo_frobenius())
    if args.apery is not None:
        out["apery"] = sorted(S.apery(args.apery))
    if args.factorize is not None:
        out["factorizations"] = [list(x) for x in factorizations(S, args.factorize)]
    if args.presentation:
        out["presentation"] = [[list(a), list(b)] for a, b in sorted(minimal_presentation(S))]
    if args.lshapes is not None:
        _diagram_output(lshapes_apery(S, args.lshapes), args, out)
    if not out:
        raise UsageError("nothing requested; pass --frobenius, --pf, --apery, ...")
    return out


def cmd_mdd(args) -> dict:
    G = WeightedCayleyDigraph(args.modulus, tuple(args.steps),
                              tuple(args.weights) if args.weights else None)
    out = {}
    if args.diameter:
        out["diameter"] = G.diameter()
    if args.distance is not None:
        if len(args.distance) != 2:
            raise UsageError("--distance takes u,v")
        out["distance"] = G.distance(*args.distance)
    if args.count or args.list or args.render != "ascii" or not out:
        _diagram_output(enumerate_mdds(G), args, out)
    return out


def cmd_family(args) -> dict:
    out = {}
    if args.table1:
        if args.max_t >= LONG_T and not args.allow_long:
            raise UsageError(f"rows with t >= {LONG_T} need --allow-long")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t", "N", "mdd_unweighted", "mdd_weighted"])
        w.writerows(table1_rows(args.max_t))
        out["table1"] = buf.getvalue()
        return out
    if args.sabariego_santos is not None:
        t = args.sabariego_santos
        if t >= LONG_T and not args.allow_long:
            raise UsageError(f"t >= {LONG_T} needs --allow-long")
        G = sabariego_santos(t, weighted=args.weighted)
        out["digraph"] = str(G)
        _diagram_output(enumerate_mdds(G), args, out)
        return out
    if args.n is None:
        raise UsageError("pass --n, --sabariego-santos or --table1")
    if args.n >= LONG_N and not args.allow_long:
        raise UsageError(f"n >= {LONG_N} needs --allow-long")
    inst = build(args.n)
    out["S"] = list(inst.S.generators)
    if args.mi:
        out["mi"] = {str(i): len(v) for i, v in classify_mi(inst).items()}
    if args.lshapes:
        built = construct_lshape_family(inst)
        if {D.key for D in built} != {D.key for D in generic_lshapes(inst)}:
            raise VerificationError("explicit and generic L-shapes differ")
        _diagram_output(built, args, out)
    if args.verify_all:
        out["verification"] = verify_all(inst)
    return out


def _format_text(result) -> str:
    lines = []
    for key, value in result.items():
        if key == "table1":
            lines.append(value.rstrip("\n"))
        elif key == "diagrams":
            for i, d in enumerate(value):
                lines.append(f"-- diagram {i + 1}")
                lines.append(d if isinstance(d, str) else json.dumps(d))
        elif key == "mi":
            lines.append("mi: " + ", ".join(f"{i}:{c}" for i, c in value.items()))
        elif isinstance(value, dict):
            lines.append(f"{key}:")
            for k, v in value.items():
                lines.append(f"  {k}: {v}")
        elif isinstance(value, list) and key not in ("S",):
            lines.append(f"{key}: " + " ".join(map(str, value)))
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lshapes", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def diagram_flags(q):
        q.add_argument("--count", action="store_true")
        q.add_argument("--list", action="store_true")
        q.add_argument("--render", choices=("ascii", "json"), default="ascii")
        q.add_argument("--json", action="store_true", help="emit a JSON run report")

    q = sub.add_parser("semigroup", help="invariants of a numerical semigroup")
    q.add_argument("--gens", type=_ints, required=True)
    q.add_argument("--apery", type=int)
    q.add_argument("--frobenius", action="store_true")
    q.add_argument("--pf", action="store_true")
    q.add_argument("--factorize", type=int)
    q.add_argument("--presentation", action="store_true")
    q.add_argument("--lshapes", type=int, metavar="M", help="L-shapes of Ap(S, M)")
    diagram_flags(q)
    q.set_defaults(func=cmd_semigroup)

    q = sub.add_parser("mdd", help="minimum distance diagrams of C(N; steps; weights)")
    q.add_argument("--modulus", type=int, required=True)
    q.add_argument("--steps", type=_ints, required=True)
    q.add_argument("--weights", type=_ints)
    q.add_argument("--diameter", action="store_true")
    q.add_argument("--distance", type=_ints, metavar="U,V")
    diagram_flags(q)
    q.set_defaults(func=cmd_mdd)

    q = sub.add_parser("family", help="the n-parametrized semigroups and the G_t digraphs")
    q.add_argument("--n", type=int)
    q.add_argument("--lshapes", action="store_true")
    q.add_argument("--mi", action="store_true")
    q.add_argument("--verify-all", action="store_true")
    q.add_argument("--sabariego-santos", type=int, metavar="T")
    q.add_argument("--weighted", action="store_true")
    q.add_argument("--table1", action="store_true")
    q.add_argument("--max-t", type=int, default=5)
    q.add_argument("--allow-long", action="store_true")
    diagram_flags(q)
    q.set_defaults(func=cmd_family)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        result = args.func(args)
    except (DomainError, UsageError, UnsupportedRender) as exc:
        print(f"lshapes: error: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"lshapes: verification failed: {exc}", file=sys.stderr)
        return 3
    if args.json:
        params = {k: v for k, v in vars(args).items() if k not in ("func", "json")}
        report = {
            "command": args.command,
            "params": params,
            "result": result,
            "wall_time": round(time.perf_counter() - t0, 6),
            "version": __version__,
        }
        print(json.dumps(report, sort_keys=True))
    else:
        print(_format_text(result))
    return 0


if __name__ == "__main__":
    sys.exit(main())
