"""``hive`` command line: lr, oracle, bijection, analyze, maximize, verify.

Exit codes: 0 success, 1 domain error (invalid partitions, empty polytope,
failed verification), 2 usage error."""
from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from .bijection import bottom_partition, chain_to_contratableau, contratableau_to_hive, hive_to_chain
from .enumeration import LRQuery, count_integral_hives, enumerate_integral_hives
from .flatspaces import ShapeError, find_increasable_subset, flatspace_summary, flatspaces
from .hive_core import HiveError, Partition, border_from_triple, is_hive
from .hive_graph import GraphPreconditionError, build_hive_graph
from .jsonio import labeling_from_json, labeling_to_json
from .polytope import EmptyPolytope, NonGenericFunctional, is_corner, maximize_generic
from .saturation import SUITES, run_suite
from .tableaux import ContraTableau, enumerate_lr_skew, parse_skew_shape


class DomainError(Exception):
    pass


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except HiveError as exc:
        raise DomainError(str(exc)) from None


def _emit(obj, args, human: str | None = None) -> None:
    if args.json or human is None:
        print(json.dumps(obj))
    else:
        print(human)


def _read_json(path: str):
    try:
        with (sys.stdin if path == "-" else open(path)) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"cannot read {path}: {exc}") from None


# --- subcommands ----------------------------------------------------------------

def cmd_lr(args) -> int:
    lam, mu, nu = _partition(args.lam), _partition(args.mu), _partition(args.nu)
    n = args.n if args.n is not None else max(1, len(lam), len(mu), len(nu))
    if nu.size != lam.size + mu.size:
        if not args.list:
            _emit({"lambda": list(lam), "mu": list(mu), "nu": list(nu), "n": n, "c": 0}, args, "0")
        return 0
    LRQuery(lam, mu, nu, n)
    border = border_from_triple(lam, mu, nu, n)
    if args.list:
        for h in enumerate_integral_hives(border):
            print(json.dumps(labeling_to_json(h)), flush=True)
        return 0
    c = count_integral_hives(border)
    _emit({"lambda": list(lam), "mu": list(mu), "nu": list(nu), "n": n, "c": c}, args, str(c))
    return 0


def cmd_oracle(args) -> int:
    try:
        outer, inner = parse_skew_shape(args.shape)
    except HiveError as exc:
        raise DomainError(str(exc)) from None
    weights = _partition(args.content)
    tabs = enumerate_lr_skew(outer, inner, weights)
    if args.list:
        for t in tabs:
            print(json.dumps(t.to_json()))
        return 0
    _emit({"shape": args.shape, "content": list(weights), "count": len(tabs)}, args, str(len(tabs)))
    return 0


def cmd_bijection(args) -> int:
    if args.from_hive:
        h = labeling_from_json(_read_json(args.from_hive))
        if not is_hive(h):
            raise DomainError("input labeling is not a hive")
        t = chain_to_contratableau(hive_to_chain(h))
        mu = list(Partition(int(x) for x in bottom_partition(h)))
        print(json.dumps({**t.to_json(), "mu": mu, "n": h.n}))
        return 0
    data = _read_json(args.from_tableau)
    t = ContraTableau.from_json(data)
    mu = _partition(args.mu) if args.mu else Partition(data.get("mu", ()) if isinstance(data, dict) else ())
    n = args.n if args.n is not None else (data.get("n") if isinstance(data, dict) else None)
    if n is None:
        raise DomainError("--n is required when the tableau file does not record n")
    print(json.dumps(labeling_to_json(contratableau_to_hive(t, mu, n))))
    return 0


def cmd_analyze(args) -> int:
    h = labeling_from_json(_read_json(args.file))
    if not is_hive(h):
        raise DomainError("input labeling is not a hive")
    out: dict = {"n": h.n}
    every = not (args.flatspaces or args.graph or args.corner or args.increasable)
    if args.flatspaces or every:
        fs = flatspaces(h)
        out["flatspaces"] = [f.to_json() for f in fs]
        out["summary"] = flatspace_summary(fs)
    if args.corner or every:
        out["corner"] = is_corner(h)
    if args.increasable or every:
        s = find_increasable_subset(h)
        out["increasable"] = s is not None
        out["increasable_subset"] = None if s is None else [list(v) for v in sorted(s)]
    if args.graph:
        out["graph"] = build_hive_graph(h).to_json()
    print(json.dumps(out))
    return 0


def cmd_maximize(args) -> int:
    lam, mu, nu = _partition(args.lam), _partition(args.mu), _partition(args.nu)
    n = args.n if args.n is not None else max(1, len(lam), len(mu), len(nu))
    border = border_from_triple(lam, mu, nu, n)
    h, omega = maximize_generic(border, random.Random(args.seed))
    out = labeling_to_json(h)
    if args.json:
        out["functional"] = {f"{i},{k}": int(c) for (i, k), c in omega.coefficients.items()}
        out["seed"] = args.seed
    print(json.dumps(out))
    return 0


def cmd_verify(args) -> int:
    n = args.n if args.n is not None else 3
    rep = run_suite(args.suite, n, args.max_size, args.seed, n_max=args.N, budget=args.budget,
                    samples=args.samples, workers=args.workers)
    data = rep.to_json()
    if args.json and args.json != "-":
        with open(args.json, "w") as fh:
            json.dump(data, fh, indent=1)
            fh.write("\n")
    if args.witness and rep.witness is not None:
        with open(args.witness, "w") as fh:
            json.dump(labeling_to_json(rep.witness), fh)
            fh.write("\n")
    if args.json == "-":
        print(json.dumps(data))
    else:
        status = "ok" if rep.ok else f"{len(rep.failures)} failures"
        print(f"{rep.claim}: {rep.samples} samples, {status}, {len(rep.findings)} findings, "
              f"{rep.runtime:.2f}s")
    return 0 if rep.ok else 1


# --- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable JSON on stdout")
    common.add_argument("--seed", type=int, default=0, help="random seed (recorded in reports)")
    common.add_argument("--n", type=int, default=None, help="side length of the hive triangle")

    p = argparse.ArgumentParser(prog="hive", description="Littlewood-Richardson coefficients via hives.")
    sub = p.add_subparsers(dest="command", required=True)

    lr = sub.add_parser("lr", parents=[common], help="count integral hives (the LR coefficient)")
    lr.add_argument("--lambda", dest="lam", required=True, help="partition, e.g. 2,1")
    lr.add_argument("--mu", required=True)
    lr.add_argument("--nu", required=True)
    lr.add_argument("--list", action="store_true", help="stream every hive as JSON, one per line")
    lr.set_defaults(func=cmd_lr)

    orc = sub.add_parser("oracle", parents=[common], help="count LR skew tableaux")
    orc.add_argument("--shape", required=True, help="skew shape outer/inner, e.g. 3,2,1/2,1")
    orc.add_argument("--content", required=True)
    orc.add_argument("--list", action="store_true", help="print each tableau as JSON rows")
    orc.set_defaults(func=cmd_oracle)

    bij = sub.add_parser("bijection", parents=[common], help="hive <-> contratableau")
    src = bij.add_mutually_exclusive_group(required=True)
    src.add_argument("--from-hive", metavar="FILE")
    src.add_argument("--from-tableau", metavar="FILE")
    bij.add_argument("--mu", help="content of the tableau's partner (defaults to the file's mu)")
    bij.set_defaults(func=cmd_bijection)

    an = sub.add_parser("analyze", parents=[common], help="flatspaces, graph, corner test of a hive")
    an.add_argument("file", help="labeling JSON ('-' for stdin)")
    mode = an.add_mutually_exclusive_group()
    mode.add_argument("--flatspaces", action="store_true")
    mode.add_argument("--graph", action="store_true")
    mode.add_argument("--corner", action="store_true")
    mode.add_argument("--increasable", action="store_true")
    an.set_defaults(func=cmd_analyze)

    mx = sub.add_parser("maximize", parents=[common], help="maximize a random generic functional")
    mx.add_argument("--lambda", dest="lam", required=True)
    mx.add_argument("--mu", required=True)
    mx.add_argument("--nu", required=True)
    mx.set_defaults(func=cmd_maximize)

    vf = argparse.ArgumentParser(add_help=False)
    vf.add_argument("--seed", type=int, default=0, help="random seed (recorded in the report)")
    vf.add_argument("--n", type=int, default=None, help="side length (default 3)")
    vf.add_argument("--json", nargs="?", const="-", default=None, metavar="FILE",
                    help="write the report as JSON to FILE, or to stdout without FILE")
    ver = sub.add_parser("verify", parents=[vf], help="run a verification suite")
    ver.add_argument("--suite", choices=SUITES, required=True)
    ver.add_argument("--max-size", type=int, default=None, help="largest |nu| in exhaustive ranges")
    ver.add_argument("--N", type=int, default=4, help="largest scaling factor")
    ver.add_argument("--budget", type=int, default=24, help="fulton budget on N*|nu|")
    ver.add_argument("--samples", type=int, default=200, help="sample count for seeded suites")
    ver.add_argument("--workers", type=int, default=None, help="worker processes")
    ver.add_argument("--witness", metavar="FILE", help="persist a corner witness hive here")
    ver.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (DomainError, HiveError, EmptyPolytope, NonGenericFunctional, ShapeError,
            GraphPreconditionError) as exc:
        print(f"hive: error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:   # e.g. `hive lr --list | head`
        sys.stdout = None
        return 0


if __name__ == "__main__":
    sys.exit(main())
