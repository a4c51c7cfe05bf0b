"""Command-line interface: gen, interpolate, verify, bench.

Exit status: 0 on success, 1 when a result is wrong or an algorithm reports
failure, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import re
import sys
import time
from collections import defaultdict
from pathlib import Path

import numpy as np

from .baselines import dense_interpolate, garg_schost
from .errors import InterpolationFailure, UnsupportedConfiguration
from .ledger import ProbeLedger
from .recursive import InterpConfig, interpolate
from .ring import DEFAULT_RING, RingSpec
from .slp import SlpError, format_slp, parse_slp, random_sparse, slp_from_sparse
from .sparsepoly import SparsePoly, format_sparse, parse_sparse
from .zerotest import zero_test

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

ALGORITHMS = ("recursive", "gargschost", "dense")
CSV_VERSION = "# slpinterp-bench v1"
CSV_FIELDS = ("algorithm", "T", "D", "seed", "trial", "probes", "max_degree",
              "total_degree", "executed", "success", "wall_time")


class UsageError(Exception):
    pass


def int_expr(text: str) -> int:
    """Decimal integer, or b^k / b**k with an optional +c / -c offset."""
    t = text.strip().replace("**", "^")
    m = re.fullmatch(r"(\d+)(?:\^(\d+))?([+-]\d+)?", t)
    if not m:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    v = int(m.group(1)) ** int(m.group(2) or 1)
    return v + int(m.group(3) or 0)


def ring_arg(text: str) -> RingSpec:
    try:
        kind, _, mod = text.partition(":")
        return RingSpec.parse(f"{kind} {int_expr(mod)}" if mod else kind)
    except (ValueError, argparse.ArgumentTypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _read_slp(path):
    try:
        return parse_slp(Path(path).read_bytes())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except SlpError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _write(path, text):
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def cmd_gen(args, out) -> int:
    if args.terms < 0:
        raise UsageError("--terms must be >= 0")
    if args.terms > 0 and args.degree + 1 < args.terms:
        raise UsageError(f"cannot fit {args.terms} distinct exponents in [0, {args.degree}]")
    rng = np.random.default_rng(args.seed)
    f = random_sparse(rng, args.terms, args.degree, args.ring)
    _write(args.out_slp, format_slp(slp_from_sparse(f)))
    _write(args.out_sparse, format_sparse(f))
    print(f"wrote {args.out_slp} and {args.out_sparse} ({f.sparsity()} terms)", file=out)
    return EXIT_OK


def run_algorithm(algo: str, slp, T: int, D: int, mu: float, seed: int, ledger: ProbeLedger) -> SparsePoly:
    if algo == "recursive":
        f, _ = interpolate(slp, InterpConfig(T, D, mu, seed), ledger=ledger)
        return f
    if algo == "gargschost":
        return garg_schost(slp, T, D, mu, np.random.default_rng(seed), ledger)
    if algo == "dense":
        return dense_interpolate(slp, D, ledger)
    raise ValueError(f"unknown algorithm {algo!r}")


def cmd_interpolate(args, out) -> int:
    slp = _read_slp(args.slp)
    if slp.num_inputs != 1:
        raise UsageError("only univariate programs are supported on the command line")
    ledger = ProbeLedger()
    try:
        f = run_algorithm(args.algo, slp, args.sparsity, args.degree_bound, args.mu, args.seed, ledger)
    except UnsupportedConfiguration as exc:
        raise UsageError(str(exc)) from None
    except InterpolationFailure as exc:
        print(f"# failure: {exc}", file=out)
        print(f"# ledger {ledger.summary()}", file=out)
        return EXIT_MISMATCH
    out.write(format_sparse(f))
    print(f"# ledger {ledger.summary()}", file=out)
    if args.verify:
        ok = zero_test(slp, f, args.sparsity + f.sparsity(), args.degree_bound)
        print(f"# verify {'ok' if ok else 'mismatch'}", file=out)
        if not ok:
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args, out) -> int:
    slp = _read_slp(args.slp)
    if slp.num_inputs != 1:
        raise UsageError("only univariate programs are supported on the command line")
    try:
        cand = parse_sparse(Path(args.candidate).read_text(), slp.ring)
    except OSError as exc:
        raise UsageError(f"cannot read {args.candidate}: {exc.strerror}") from None
    except ValueError as exc:
        raise UsageError(f"{args.candidate}: {exc}") from None
    if cand.ring != slp.ring:
        raise UsageError(f"candidate ring {cand.ring} differs from program ring {slp.ring}")
    ledger = ProbeLedger()
    ok = zero_test(slp, cand, args.sparsity + cand.sparsity(), args.degree_bound, ledger)
    print(f"{'ok' if ok else 'mismatch'} ({ledger.summary()})", file=out)
    return EXIT_OK if ok else EXIT_MISMATCH


def bench_records(T_list, D_list, trials, mu, seed, algorithms=ALGORITHMS,
                  dense_max_degree=1 << 14, ring=DEFAULT_RING, timing=True):
    """Yield one row dict per (T, D, trial, algorithm), in grid order."""
    for T in T_list:
        for D in D_list:
            for trial in range(trials):
                ss = np.random.SeedSequence([seed, T, D, trial])
                inst_seed, algo_seed = (int(s) for s in ss.generate_state(2))
                f = random_sparse(np.random.default_rng(inst_seed), min(T, D + 1), D, ring)
                slp = slp_from_sparse(f)
                for algo in algorithms:
                    row = dict(algorithm=algo, T=T, D=D, seed=seed, trial=trial)
                    ledger = ProbeLedger()
                    if algo == "dense" and D > dense_max_degree:
                        # not run: the dense cost is fixed at D+1 probes of degree 1
                        row.update(probes=D + 1, max_degree=1, total_degree=D + 1,
                                   executed=0, success="", wall_time="")
                        yield row
                        continue
                    start = time.perf_counter()
                    try:
                        ok = run_algorithm(algo, slp, T, D, mu, algo_seed, ledger) == f
                    except InterpolationFailure:
                        ok = False
                    wall = time.perf_counter() - start
                    row.update(probes=ledger.count, max_degree=ledger.max_degree,
                               total_degree=ledger.total_degree, executed=1, success=int(ok),
                               wall_time=f"{wall:.4f}" if timing else "")
                    yield row


def write_bench_csv(rows, stream) -> list[dict]:
    stream.write(CSV_VERSION + "\n")
    writer = csv.DictWriter(stream, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    kept = []
    for row in rows:
        writer.writerow(row)
        kept.append(row)
    return kept


def read_bench_csv(text: str) -> list[dict]:
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    return list(csv.DictReader(lines))


def bench_summary(rows) -> str:
    cells = defaultdict(list)
    for r in rows:
        cells[(int(r["T"]), int(r["D"]), r["algorithm"])].append(r)
    lines = [f"{'T':>4} {'D':>12} {'algorithm':>11} {'mean total_degree':>18} {'success':>8}"]
    for (T, D, algo), rs in cells.items():
        mean = sum(int(r["total_degree"]) for r in rs) / len(rs)
        done = [r for r in rs if str(r["executed"]) == "1"]
        succ = f"{sum(int(r['success']) for r in done)}/{len(done)}" if done else "n/a"
        lines.append(f"{T:>4} {D:>12} {algo:>11} {mean:>18.1f} {succ:>8}")
    return "\n".join(lines)


def cmd_bench(args, out) -> int:
    for algo in args.algos:
        if algo not in ALGORITHMS:
            raise UsageError(f"unknown algorithm {algo!r}")
    buf = io.StringIO()
    rows = write_bench_csv(
        bench_records(args.T, args.D, args.trials, args.mu, args.seed, args.algos,
                      args.dense_max_degree, timing=not args.no_timing), buf)
    _write(args.out, buf.getvalue())
    print(bench_summary(rows), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="slpinterp", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="random sparse polynomial and its straight-line program")
    g.add_argument("--terms", type=int, required=True)
    g.add_argument("--degree", type=int_expr, required=True)
    g.add_argument("--ring", type=ring_arg, default=DEFAULT_RING, help="zmod:<q> or int")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--out-slp", required=True)
    g.add_argument("--out-sparse", required=True)
    g.set_defaults(func=cmd_gen)

    i = sub.add_parser("interpolate", help="recover the polynomial computed by a program")
    i.add_argument("--slp", required=True)
    i.add_argument("--sparsity", type=int, required=True, help="bound T on the number of terms")
    i.add_argument("--degree-bound", type=int_expr, required=True, help="bound D on the degree")
    i.add_argument("--mu", type=float, default=0.05, help="failure tolerance")
    i.add_argument("--seed", type=int, default=0)
    i.add_argument("--algo", choices=ALGORITHMS, default="recursive")
    i.add_argument("--verify", action="store_true", help="certify the result by a deterministic zero test")
    i.set_defaults(func=cmd_interpolate)

    v = sub.add_parser("verify", help="deterministically test a candidate against a program")
    v.add_argument("--slp", required=True)
    v.add_argument("--candidate", required=True)
    v.add_argument("--sparsity", type=int, required=True)
    v.add_argument("--degree-bound", type=int_expr, required=True)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="probe-cost sweep over a (T, D) grid, written as CSV")
    b.add_argument("--T", type=int, nargs="+", required=True)
    b.add_argument("--D", type=int_expr, nargs="+", required=True)
    b.add_argument("--trials", type=int, required=True)
    b.add_argument("--mu", type=float, default=0.05)
    b.add_argument("--seed", type=int, required=True)
    b.add_argument("--out", required=True)
    b.add_argument("--algos", nargs="+", default=list(ALGORITHMS))
    b.add_argument("--dense-max-degree", type=int_expr, default=1 << 14,
                   help="above this D the dense row records its fixed cost without running")
    b.add_argument("--no-timing", action="store_true", help="leave wall_time empty for byte-stable output")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if hasattr(args, "mu") and not 0 < args.mu < 1:
        print("slpinterp: error: --mu must lie in (0, 1)", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"slpinterp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
