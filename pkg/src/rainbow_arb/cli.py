"""Command-line front end: ``rba {validate,solve,verify,reduce-3dm,gen}``.

Every command prints one JSON record per line on stdout. Exit codes:
0 ok, 2 counterexample found, 3 budget exhausted, 4 input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

from . import fileio
from .errors import (
    BudgetExhausted,
    InfeasibleSpec,
    InstanceError,
    InvalidHypergraph,
    ParseError,
    PreconditionFailed,
    TooLarge,
)
from .gadget import build_gadget
from .generators import SHAPES, GenSpec, generate
from .harness import ALGORITHMS, cert_record, solve, verify_campaign

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_BUDGET, EXIT_INPUT = 0, 2, 3, 4
ENV_NODE_BUDGET = "RBA_NODE_BUDGET"
ENV_TIME_BUDGET = "RBA_TIME_BUDGET"


def emit(record: dict, stream=None):
    stream = stream or sys.stdout
    stream.write(json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n")


def _env_number(name, kind):
    raw = os.environ.get(name)
    return kind(raw) if raw else None


def _error_record(command, exc) -> dict:
    rec = {"type": "error", "command": command, "error": type(exc).__name__, "message": str(exc)}
    for attr in ("color", "vertex", "line"):
        val = getattr(exc, attr, None)
        if val is not None:
            rec[attr] = val
    return rec


def cmd_validate(args) -> int:
    try:
        inst = fileio.read_instance(args.path)
    except (OSError, ParseError, InstanceError) as exc:
        emit(_error_record("validate", exc))
        return EXIT_INPUT
    emit({"type": "report", "command": "validate", "outcome": "ok", "n": inst.n, "k": inst.k,
          "digest": fileio.instance_digest(inst)})
    return EXIT_OK


def cmd_solve(args) -> int:
    try:
        inst = fileio.read_instance(args.path)
    except (OSError, ParseError, InstanceError) as exc:
        emit(_error_record("solve", exc))
        return EXIT_INPUT
    try:
        res = solve(inst, args.algo, args.root, args.size, args.node_budget, args.time_budget)
    except BudgetExhausted as exc:
        rec = _error_record("solve", exc)
        rec.update(outcome="unknown", algorithm=args.algo, nodes=exc.nodes)
        emit(rec)
        return EXIT_BUDGET
    except (PreconditionFailed, ValueError) as exc:
        rec = _error_record("solve", exc)
        rec["error"] = "PreconditionFailed"
        rec["reason"] = type(exc).__name__
        rec["algorithm"] = args.algo
        emit(rec)
        return EXIT_INPUT
    rec = {"type": "report", "command": "solve", "digest": fileio.instance_digest(inst),
           "algorithm": res.algorithm, "outcome": res.outcome, "nodes": res.nodes,
           "required_root": args.root, "size": args.size, **cert_record(res.certificate)}
    if res.max_per_color != 1:
        rec["max_per_color"] = res.max_per_color
    if args.timing:
        rec["elapsed"] = round(res.elapsed, 6)
    emit(rec)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        summary = verify_campaign(args.n, args.k, args.mode, args.samples, args.seed, args.jobs,
                                  args.size, args.node_budget, args.time_budget)
    except (TooLarge, ValueError) as exc:
        emit(_error_record("verify", exc))
        return EXIT_INPUT
    for rec in summary["flagged"]:
        emit(rec)
    emit(summary)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            cols = ["n", "k", "mode", "seed", "size", "total", "found", "none", "unknown"]
            w.writerow(cols)
            w.writerow([summary[c] for c in cols])
    if summary["none"]:
        return EXIT_COUNTEREXAMPLE
    if summary["unknown"]:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_reduce_3dm(args) -> int:
    try:
        h = fileio.parse_3dm(Path(args.path).read_text())
    except (OSError, ParseError, InvalidHypergraph) as exc:
        emit(_error_record("reduce-3dm", exc))
        return EXIT_INPUT
    inst, layout, root = build_gadget(h)
    out = Path(args.out)
    fileio.write_instance(out, inst)
    layout_path = out.with_name(out.name + ".layout")
    layout_path.write_text(fileio.serialize_layout(layout))
    emit({"type": "report", "command": "reduce-3dm", "outcome": "ok", "p": h.p, "q": h.q,
          "n": inst.n, "k": inst.k, "root": root, "digest": fileio.instance_digest(inst),
          "out": str(out), "layout": str(layout_path)})
    return EXIT_OK


def cmd_gen(args) -> int:
    spec = GenSpec(args.n, args.k, args.shape.replace("-", "_"), args.seed)
    try:
        inst = generate(spec)
    except InfeasibleSpec as exc:
        emit(_error_record("gen", exc))
        return EXIT_INPUT
    text = fileio.serialize_instance(inst)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    emit({"type": "report", "command": "gen", "outcome": "ok", "n": spec.n, "k": spec.k,
          "shape": spec.shape, "seed": spec.seed, "digest": fileio.instance_digest(inst),
          "out": args.out}, sys.stdout if args.out else sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rba", description="Rainbow spanning arborescence toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    def budgets(p):
        p.add_argument("--node-budget", type=int, default=_env_number(ENV_NODE_BUDGET, int))
        p.add_argument("--time-budget", type=float, default=_env_number(ENV_TIME_BUDGET, float))

    p = sub.add_parser("validate", help="check an instance file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("solve", help="find a rainbow arborescence")
    p.add_argument("path")
    p.add_argument("--algo", choices=ALGORITHMS, default="auto")
    p.add_argument("--root", type=int)
    p.add_argument("--size", type=int)
    p.add_argument("--timing", action="store_true", help="include wall-clock time (breaks byte-identical reruns)")
    budgets(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="run a verification campaign over many instances")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--mode", choices=("exhaustive", "sample"), default="sample")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--size", type=int)
    p.add_argument("--csv")
    budgets(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce-3dm", help="build the hardness gadget for a 3DM instance")
    p.add_argument("path")
    p.add_argument("out")
    p.set_defaults(func=cmd_reduce_3dm)

    p = sub.add_parser("gen", help="write a random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--shape", default="random",
                   choices=SHAPES + tuple(s.replace("_", "-") for s in SHAPES if "_" in s))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "k", "absent") is None:
        args.k = args.n - 1
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
