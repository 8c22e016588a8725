"""Command-line entry point: ``rsumset <subcommand> ...``.

Exit status is 0 on success, 1 when a mathematically guaranteed check fails
(which means a bug here, not a counterexample), and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys

from . import cyclotomic, residue
from .errors import CheckFailure, ModulusError, PreconditionError
from .explorer import (CONJECTURE_CSV_HEADER, SearchSpec, conjecture_scan, search)
from .fourier import dft, random_integer_function, support, uncertainty_check
from .proof import trace_theorem2
from .residue import BoundReport, ResidueSet, as_modulus, bound_table, restricted_sumset
from .witness import construct_witness, verify_witness

DEFAULT_SEED = 12345

BOUNDS_CSV_HEADER = ["cd", "eh", "thm2", "pan_sun", "clamped"]
SUMSET_CSV_HEADER = ["p", "A", "B", "S", "C", "size", "thm2_bound", "tight"]
SEARCH_CSV_HEADER = ["p", "nA", "nB", "nS", "min_C", "thm2", "pan_sun", "A", "B", "S"]


class UsageError(Exception):
    pass


def _set_field(xs) -> str:
    return " ".join(map(str, xs))


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow(["" if v is None else str(v).lower() if isinstance(v, bool) else v for v in r])
    return buf.getvalue()


def _human(d, indent=0) -> str:
    pad = "  " * indent
    lines = []
    for k, v in d.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.append(_human(v, indent + 1))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{k}:")
            for item in v:
                lines.append(f"{pad}  - " + ", ".join(f"{a}={b}" for a, b in item.items()))
        else:
            lines.append(f"{pad}{k}: {v}")
    return "\n".join(lines)


def emit(kind: str, payload: dict, fmt: str = "json") -> str:
    """Serialize a report dict; ``kind`` selects the CSV layout."""
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "human":
        return _human(payload) + "\n"
    if fmt != "csv":
        raise UsageError(f"unknown format {fmt!r}")
    if kind == "bounds":
        return _csv(BOUNDS_CSV_HEADER, [[payload[k] for k in BOUNDS_CSV_HEADER]])
    if kind == "sumset":
        return _csv(SUMSET_CSV_HEADER, [[payload["p"], _set_field(payload["A"]),
                                         _set_field(payload["B"]), _set_field(payload["S"]),
                                         _set_field(payload["C"]), payload["size"],
                                         payload["thm2_bound"], payload["tight"]]])
    if kind == "search":
        sp, b = payload["spec"], payload["bounds"]
        rows = [[sp["p"], sp["nA"], sp["nB"], sp["nS"], payload["min_C"], b["thm2"], b["pan_sun"],
                 _set_field(w["A"]), _set_field(w["B"]), _set_field(w["S"])]
                for w in payload["extremal_witnesses"]]
        return _csv(SEARCH_CSV_HEADER, rows)
    if kind == "scan":
        return _csv(CONJECTURE_CSV_HEADER,
                    [[payload["p"]] + [c[k] for k in CONJECTURE_CSV_HEADER[1:]]
                     for c in payload["cells"]])
    raise UsageError(f"csv output is not available for {kind}")


# ------------------------------------------------------------------ commands

def _modulus(p):
    m = as_modulus(p)
    m.check_ceiling()
    return m


def _parse_set(m, text, name) -> ResidueSet:
    try:
        return ResidueSet.parse(m, text)
    except ValueError as e:
        raise UsageError(f"--{name}: {e}") from None


def cmd_bounds(args):
    m = _modulus(args.p)
    return "bounds", bound_table(m, args.a_size, args.b_size, args.s_size).to_dict()


def cmd_sumset(args):
    m = _modulus(args.p)
    A = _parse_set(m, args.a, "a")
    B = _parse_set(m, args.b, "b")
    S = _parse_set(m, args.s, "s")
    C = restricted_sumset(A, B, S)
    thm2 = bound_table(m, len(A), len(B), len(S)).thm2
    if A and B and len(C) < thm2:
        raise CheckFailure("thm2_bound", f"|C| = {len(C)} < {thm2}")
    return "sumset", {"p": m.p, "A": A.to_list(), "B": B.to_list(), "S": S.to_list(),
                      "C": C.to_list(), "size": len(C), "thm2_bound": thm2,
                      "tight": len(C) == thm2}


def cmd_uncertainty(args):
    m = cyclotomic.field_modulus(_modulus(args.p))
    if m.p == 2:
        raise UsageError("--p: the uncertainty check needs an odd prime")
    if args.trials < 0:
        raise UsageError("--trials must be >= 0")
    rng = random.Random(args.seed)
    violations = 0
    min_lhs = None
    for _ in range(args.trials):
        res = uncertainty_check(random_integer_function(m, rng))
        violations += not res.holds
        min_lhs = res.lhs if min_lhs is None else min(min_lhs, res.lhs)
    payload = {"p": m.p, "trials": args.trials, "seed": args.seed,
               "violations": violations, "min_lhs": min_lhs, "required": m.p + 1}
    if violations:
        raise CheckFailure("uncertainty", json.dumps(payload))
    return "uncertainty", payload


def cmd_witness(args):
    m = cyclotomic.field_modulus(_modulus(args.p))
    A = _parse_set(m, args.a, "a")
    B = _parse_set(m, args.b, "b")
    f = construct_witness(m, A, B, args.seed)
    f_hat = dft(f)
    ok = verify_witness(f, A, B)
    payload = {"p": m.p, "A": A.to_list(), "B": B.to_list(), "seed": args.seed,
               "f": f.to_json(), "f_hat": f_hat.to_json(),
               "supports": {"f": support(f).to_list(), "f_hat": support(f_hat).to_list()},
               "verified": ok}
    if not ok:
        raise CheckFailure("verify_witness", json.dumps(payload["supports"]))
    return "witness", payload


def cmd_trace(args):
    m = cyclotomic.field_modulus(_modulus(args.p))
    A = _parse_set(m, args.a, "a")
    B = _parse_set(m, args.b, "b")
    S = _parse_set(m, args.s, "s")
    payload = trace_theorem2(m, A, B, S, args.seed).to_dict()
    payload["seed"] = args.seed
    return "trace", payload


def cmd_search(args):
    m = _modulus(args.p)
    if args.samples is not None:
        spec = SearchSpec(m.p, args.a_size, args.b_size, args.s_size, mode="sampled",
                          count=args.samples, seed=args.seed, workers=args.jobs)
    else:
        spec = SearchSpec(m.p, args.a_size, args.b_size, args.s_size,
                          symmetry_reduction=not args.no_symmetry, workers=args.jobs,
                          budget=args.budget)
    return "search", search(spec).to_dict(timing=args.timing)


def cmd_scan(args):
    m = _modulus(args.p)
    if args.max_s is not None and not 0 <= args.max_s <= m.p:
        raise UsageError(f"--max-s must lie in [0, {m.p}]")
    cells = conjecture_scan(m, args.max_s, workers=args.jobs, budget=args.budget)
    payload = {"p": m.p, "max_s": m.p if args.max_s is None else args.max_s,
               "cells": [c.to_dict() for c in cells]}
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            fh.write(emit("scan", payload, "csv"))
    return "scan", payload


# -------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "human"], default="json")
    common.add_argument("--max-prime", type=int, default=None,
                        help="raise the prime ceiling for field computations")

    parser = argparse.ArgumentParser(prog="rsumset", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("--p", type=int, required=True)
        return sp

    sp = add("bounds", cmd_bounds, "closed-form lower bounds for given sizes")
    sp.add_argument("--a-size", type=int, required=True)
    sp.add_argument("--b-size", type=int, required=True)
    sp.add_argument("--s-size", type=int, default=0)

    sp = add("sumset", cmd_sumset, "restricted sumset of explicit sets")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--s", default="")

    sp = add("uncertainty", cmd_uncertainty, "random checks of |supp f| + |supp fhat| >= p+1")
    sp.add_argument("--trials", type=int, default=200)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)

    sp = add("witness", cmd_witness, "function with prescribed support and Fourier support")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)

    sp = add("trace", cmd_trace, "run the Fourier argument on one instance")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--s", default="")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)

    sp = add("search", cmd_search, "minimal |C| over configurations of given sizes")
    sp.add_argument("--a-size", type=int, required=True)
    sp.add_argument("--b-size", type=int, required=True)
    sp.add_argument("--s-size", type=int, default=0)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="default")
    mode.add_argument("--samples", type=int)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--no-symmetry", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--budget", type=int, default=10**8)
    sp.add_argument("--timing", action="store_true", help="include elapsed seconds in the report")

    sp = add("scan", cmd_scan, "conjecture evidence table over all size cells")
    sp.add_argument("--max-s", type=int, default=None)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--budget", type=int, default=10**8)
    sp.add_argument("--csv", default=None, help="also write the table as CSV to this path")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    if args.max_prime is not None:
        cyclotomic.FIELD_PRIME_CEILING = args.max_prime
        residue.SET_PRIME_CEILING = max(residue.SET_PRIME_CEILING, args.max_prime)
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return 2
    try:
        kind, payload = args.func(args)
        out = emit(kind, payload, args.format)
    except CheckFailure as e:
        payload = getattr(e, "payload", None)
        if payload is not None:
            sys.stdout.write(json.dumps(payload.to_dict(), indent=2) + "\n")
        print(f"check failed: {e}", file=sys.stderr)
        return 1
    except (UsageError, ModulusError, PreconditionError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
