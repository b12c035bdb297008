"""Command-line front end.

Subcommands: jpoly, classes, invariants, convert, bench, verify.  Global
flags select plain or structured (JSON) output and the seed for the
randomized commands.  Exit codes: 0 success, 1 verification failure,
2 usage/parse error, 3 enumeration budget exceeded.

Structured payloads contain only strings, integers, arrays and objects;
every rational is rendered as a string such as "-7/2" so exactness
survives serialization.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from math import factorial

from . import _kernels, symfun
from .algebra import parse_rational, render_polynomial
from .errors import BudgetExceeded, ParseError, SymtraceError
from .matrices import (
    ANTISYM_BUDGET,
    ExactMatrix,
    matrix_from_json,
    power_traces,
    prodet_antisym,
    prodet_cauchy,
    prodet_leverrier,
    prodet_minors,
)
from .operators import cauchy_j, cauchy_j_closed, cauchy_k, cauchy_k_closed
from .partitions import cauchy_h, enumerate_partitions
from .symgroup import class_sizes
from .verify import ALL_CHECKS, random_int_matrix, run_checks

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

METHODS = {
    "minors": prodet_minors,
    "leverrier": prodet_leverrier,
    "cauchy": prodet_cauchy,
    "antisym": prodet_antisym,
}


@dataclass
class OutputDocument:
    """Renderable command result: plain text plus a JSON-able payload."""

    payload: dict
    plain: str

    def render(self, fmt: str) -> str:
        if fmt == "structured":
            return json.dumps(self.payload, indent=2)
        return self.plain


def _poly_payload(p) -> dict:
    return {
        "text": render_polynomial(p),
        "terms": [
            {"monomial": [[i, e] for i, e in m.pairs], "coefficient": str(c)}
            for m, c in p.sorted_terms()
        ],
    }


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


# ---------------------------------------------------------------------
# Subcommands (each returns (document, exit_code))
# ---------------------------------------------------------------------

def cmd_jpoly(args) -> tuple[OutputDocument, int]:
    variant = "plus" if args.plus else "minus"
    iterative = cauchy_k if args.plus else cauchy_j
    closed = cauchy_k_closed if args.plus else cauchy_j_closed

    if args.check:
        a, b = iterative(args.k), closed(args.k)
        agree = a == b
        payload = {
            "command": "jpoly", "k": args.k, "variant": variant,
            "iterative": _poly_payload(a), "closed": _poly_payload(b),
            "verdict": "agree" if agree else "disagree",
        }
        plain = (f"iterative: {render_polynomial(a)}\n"
                 f"closed:    {render_polynomial(b)}\n"
                 f"verdict:   {'agree' if agree else 'DISAGREE'}")
        return OutputDocument(payload, plain), EXIT_OK if agree else EXIT_VERIFICATION

    p = closed(args.k) if args.closed else iterative(args.k)
    payload = {
        "command": "jpoly", "k": args.k, "variant": variant,
        "form": "closed" if args.closed else "iterative",
        "polynomial": _poly_payload(p),
    }
    return OutputDocument(payload, render_polynomial(p)), EXIT_OK


def cmd_classes(args) -> tuple[OutputDocument, int]:
    n = args.n
    census = class_sizes(n, max_n=8) if args.verify else None

    rows = []
    all_match = True
    for lam in enumerate_partitions(n):
        alpha = lam.to_symbol()
        size = cauchy_h(alpha)
        row = {"partition": list(lam.parts), "symbol": list(alpha.multiplicities), "size": size}
        if census is not None:
            match = census.get(alpha) == size
            all_match = all_match and match
            row["census"] = census.get(alpha, 0)
            row["verdict"] = "match" if match else "MISMATCH"
        rows.append(row)

    total = sum(r["size"] for r in rows)
    total_ok = total == factorial(n)
    payload = {
        "command": "classes", "n": n, "rows": rows, "total": total,
        "total_verdict": "match" if total_ok else "MISMATCH",
    }

    lines = [f"conjugacy classes of S_{n}:"]
    for r in rows:
        lam = "(" + ",".join(map(str, r["partition"])) + ")"
        sym = list(r["symbol"])
        while len(sym) > 1 and sym[-1] == 0:
            sym.pop()
        line = f"  {lam:<18} [{','.join(map(str, sym))}]".ljust(38) + f" {r['size']}"
        if census is not None:
            line += f"  census={r['census']} {r['verdict']}"
        lines.append(line)
    lines.append(f"total = {total} (n! = {factorial(n)}: {'match' if total_ok else 'MISMATCH'})")
    ok = total_ok and all_match
    return OutputDocument(payload, "\n".join(lines)), EXIT_OK if ok else EXIT_VERIFICATION


def cmd_invariants(args) -> tuple[OutputDocument, int]:
    try:
        with open(args.matrix_file, encoding="utf-8") as fh:
            a = matrix_from_json(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {args.matrix_file}: {exc}") from exc

    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    unknown = [m for m in methods if m not in METHODS]
    if unknown:
        raise UsageError(f"unknown methods: {', '.join(unknown)}")

    traces = power_traces(a, a.n)
    table = {name: [METHODS[name](a, k) for k in range(1, a.n + 1)] for name in methods}

    agree = all(
        len({table[name][k] for name in methods}) == 1
        for k in range(a.n)
    )
    payload = {
        "command": "invariants", "n": a.n,
        "power_traces": [str(v) for v in traces],
        "prodeterminants": {name: [str(v) for v in values] for name, values in table.items()},
        "verdict": "agree" if agree else "disagree",
    }
    lines = [f"n = {a.n}",
             "I: " + " ".join(str(v) for v in traces)]
    for name in methods:
        lines.append(f"J[{name}]: ".ljust(14) + " ".join(str(v) for v in table[name]))
    lines.append(f"verdict: {'agree' if agree else 'DISAGREE'}")
    if not agree:
        for k in range(a.n):
            values = {name: table[name][k] for name in methods}
            if len(set(values.values())) > 1:
                lines.append(f"  diff at k={k + 1}: " +
                             ", ".join(f"{n}={v}" for n, v in values.items()))
    return OutputDocument(payload, "\n".join(lines)), EXIT_OK if agree else EXIT_VERIFICATION


def cmd_convert(args) -> tuple[OutputDocument, int]:
    if len(args.values) != args.k:
        raise UsageError(f"expected {args.k} power-sum values, got {len(args.values)}")
    s = [parse_rational(v) for v in args.values]
    fn = symfun.c_from_power_sums if args.to == "elementary" else symfun.w_from_power_sums
    value = fn(args.k, s)
    payload = {"command": "convert", "k": args.k, "to": args.to,
               "power_sums": [str(v) for v in s], "value": str(value)}
    return OutputDocument(payload, str(value)), EXIT_OK


def cmd_bench(args) -> tuple[OutputDocument, int]:
    import random

    rng = random.Random(args.seed)
    rows: list[dict] = []

    if args.what == "methods":
        for n in range(1, args.nmax + 1):
            a = random_int_matrix(rng, n)
            for k in range(1, min(n, args.kmax) + 1):
                for name, fn in METHODS.items():
                    if name == "antisym" and factorial(k) * n**k > ANTISYM_BUDGET:
                        rows.append({"method": name, "n": n, "k": k,
                                     "repeats": args.repeats,
                                     "seconds": "", "value": "skipped"})
                        continue
                    best = None
                    value = None
                    for _ in range(args.repeats):
                        t0 = time.perf_counter()
                        value = fn(a, k)
                        dt = time.perf_counter() - t0
                        best = dt if best is None else min(best, dt)
                    rows.append({"method": name, "n": n, "k": k,
                                 "repeats": args.repeats,
                                 "seconds": f"{best:.6f}", "value": str(value)})
        header = "method,n,k,repeats,seconds,value"
    else:  # backends: compiled vs pure-Python kernels
        n, k = args.nmax, min(args.kmax, args.nmax)
        a = random_int_matrix(rng, n)
        flat = [int(x) for row in a.rows for x in row]
        for backend in _kernels.backends():
            best = None
            raw = None
            for _ in range(args.repeats):
                t0 = time.perf_counter()
                raw = _kernels.antisym_raw_with(backend, flat, n, k)
                dt = time.perf_counter() - t0
                best = dt if best is None else min(best, dt)
            rows.append({"kernel": "antisym", "backend": backend, "n": n, "k": k,
                         "repeats": args.repeats, "seconds": f"{best:.6f}",
                         "value": str(raw)})
        tally_n = min(args.nmax + 3, 8)
        for backend, mod in _kernels.backends().items():
            best = None
            count = None
            for _ in range(args.repeats):
                t0 = time.perf_counter()
                count = len(mod.tally_cycle_types(tally_n))
                dt = time.perf_counter() - t0
                best = dt if best is None else min(best, dt)
            rows.append({"kernel": "class_tally", "backend": backend, "n": tally_n, "k": "",
                         "repeats": args.repeats, "seconds": f"{best:.6f}",
                         "value": str(count)})
        header = "kernel,backend,n,k,repeats,seconds,value"

    payload = {"command": "bench", "what": args.what, "seed": args.seed,
               "active_backend": _kernels.BACKEND, "rows": rows}
    lines = [header]
    for r in rows:
        lines.append(",".join(str(r[c]) for c in header.split(",")))
    return OutputDocument(payload, "\n".join(lines)), EXIT_OK


def cmd_verify(args) -> tuple[OutputDocument, int]:
    names = None if args.all or not args.checks else [c.strip() for c in args.checks.split(",")]
    try:
        results = run_checks(names, max_k=args.max_k, max_n=args.max_n, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    passed = all(r.passed for r in results)
    payload = {
        "command": "verify", "seed": args.seed,
        "max_k": args.max_k, "max_n": args.max_n,
        "checks": [{"name": r.name, "verdict": "pass" if r.passed else "fail",
                    "detail": r.detail} for r in results],
        "verdict": "pass" if passed else "fail",
    }
    lines = [f"{r.name:<12} {'pass' if r.passed else 'FAIL'}  ({r.detail})" for r in results]
    lines.append(f"overall: {'pass' if passed else 'FAIL'}")
    return OutputDocument(payload, "\n".join(lines)), EXIT_OK if passed else EXIT_VERIFICATION


class UsageError(SymtraceError):
    pass


# ---------------------------------------------------------------------
# Parser and entry point
# ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symtrace",
        description="Exact symmetric-function identities and matrix trace invariants.",
    )
    parser.add_argument("--format", choices=("plain", "structured"), default="plain",
                        help="output as plain text or a JSON document")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for the randomized commands (bench, verify)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jpoly", help="generate the k-th trace polynomial")
    p.add_argument("k", type=_positive_int)
    p.add_argument("--plus", action="store_true",
                   help="unsigned variant (class-size generating polynomial)")
    p.add_argument("--closed", action="store_true",
                   help="build from the closed class-size sum instead of iterating")
    p.add_argument("--check", action="store_true",
                   help="build both ways and report agreement")
    p.set_defaults(fn=cmd_jpoly)

    p = sub.add_parser("classes", help="conjugacy-class table of S_n")
    p.add_argument("n", type=_positive_int)
    p.add_argument("--verify", action="store_true",
                   help="cross-check against exhaustive enumeration (n <= 8)")
    p.set_defaults(fn=cmd_classes)

    p = sub.add_parser("invariants", help="power traces and prodeterminants of a matrix file")
    p.add_argument("matrix_file")
    p.add_argument("--methods", default="minors,leverrier,cauchy,antisym",
                   help="comma-separated subset of minors,leverrier,cauchy,antisym")
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("convert", help="power sums to elementary or Wronski values")
    p.add_argument("--to", choices=("elementary", "wronski"), required=True)
    p.add_argument("k", type=_positive_int)
    p.add_argument("values", nargs="+", help="power-sum values s_1..s_k as rationals")
    p.set_defaults(fn=cmd_convert)

    p = sub.add_parser("bench", help="wall-time comparison (CSV-ready)")
    p.add_argument("--nmax", type=_positive_int, default=5)
    p.add_argument("--kmax", type=_positive_int, default=5)
    p.add_argument("--repeats", type=_positive_int, default=3)
    p.add_argument("--what", choices=("methods", "backends"), default="methods",
                   help="compare the four J_k algorithms, or compiled vs pure kernels")
    p.set_defaults(fn=cmd_bench)

    p = sub.add_parser("verify", help="run the cross-oracle verification suite")
    p.add_argument("--all", action="store_true", help="run every check (default)")
    p.add_argument("--checks", default="",
                   help=f"comma-separated subset of: {', '.join(ALL_CHECKS)}")
    p.add_argument("--max-k", type=_positive_int, default=8, dest="max_k")
    p.add_argument("--max-n", type=_positive_int, default=5, dest="max_n")
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        doc, code = args.fn(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SymtraceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(doc.render(args.format))
    return code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
