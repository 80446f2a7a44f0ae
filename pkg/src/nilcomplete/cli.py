"""Command-line front end.

Exit codes: 0 success, 1 usage or I/O error, 2 no completion exists
(|lambda| > r), 3 a certification failed (verify mismatch, batch failures).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .batch import run_batch
from .connection import emit
from .engine import RunOptions, run
from .errors import NilcompleteError, NoCompletionExists, NotNilpotent
from .graphs import canonical_nr_graph, to_dot, to_tikz
from .jordan import jordan_type
from .matrices import IntMatrix, make_nr, parse_dense, parse_triplets
from .partitions import format_partition, parse_partition

EXIT_OK, EXIT_USAGE, EXIT_NO_SOLUTION, EXIT_FAILED = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _instance_args(p: argparse.ArgumentParser, need_lambda: bool = True) -> None:
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=parse_partition, required=need_lambda,
                   help="target partition, e.g. 5,4,1")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nilcomplete", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("complete", help="build X with N_r + X nilpotent of type lambda")
    _instance_args(p)
    p.add_argument("--format", choices=["dense", "triplets", "json"], default="triplets")
    p.add_argument("--trace", metavar="PATH", help="write the graft trace as JSON lines")
    p.add_argument("--check", action="store_true", help="assert engine invariants every iteration")
    p.add_argument("--verify", action="store_true", help="certify the Jordan type of N_r + X")
    p.add_argument("--full", action="store_true", help="print N_r + X instead of X")

    p = sub.add_parser("verify", help="certify nilpotency and Jordan type of a matrix file")
    p.add_argument("path", help="matrix file ('-' for stdin)")
    p.add_argument("--format", choices=["auto", "dense", "triplets"], default="auto")
    p.add_argument("--n", type=int, help="dimension for triplet input (default: largest index)")
    p.add_argument("--expect", type=parse_partition, help="required Jordan type")

    p = sub.add_parser("batch", help="exhaustive sweep over 0 < r < n <= max-n")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--no-check", action="store_true", help="skip invariant checks (oracle only)")

    p = sub.add_parser("connection", help="emit d + A(z) dz/z for slope r/n")
    _instance_args(p)
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("graph", help="export the initial or final graph")
    _instance_args(p, need_lambda=False)
    p.add_argument("--initial", action="store_true", help="canonical graph of N_r")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", help="Graphviz DOT (default)")
    fmt.add_argument("--tikz", action="store_true")
    p.add_argument("--output", "-o", metavar="PATH")
    return parser


def _format_matrix(X: IntMatrix, fmt: str) -> str:
    if fmt == "dense":
        return X.to_dense_text()
    return X.to_triplet_text()


def cmd_complete(args) -> int:
    opts = RunOptions.from_env(check_invariants=args.check, trace=bool(args.trace))
    res = run(args.n, args.r, args.lam, opts)
    out = make_nr(args.n, args.r) + res.X if args.full else res.X
    certified = None
    if args.verify:
        certified = jordan_type(make_nr(args.n, args.r) + res.X).partition
    if args.format == "json":
        payload = {"n": args.n, "r": args.r, "lambda": list(args.lam),
                   "triplets": [list(t) for t in out.triplets()]}
        if certified is not None:
            payload["certified_type"] = list(certified)
        sys.stdout.write(json.dumps(payload) + "\n")
    else:
        sys.stdout.write(_format_matrix(out, args.format))
        if certified is not None:
            print(f"certified type: {format_partition(certified)}", file=sys.stderr)
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            for rec in res.trace:
                fh.write(json.dumps(rec.to_json()) + "\n")
    if certified is not None and certified != args.lam:
        return EXIT_FAILED
    return EXIT_OK


def _read_matrix(path: str, fmt: str, n: int | None) -> IntMatrix:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    if fmt == "auto":
        rows = [line.split() for line in text.splitlines()
                if line.strip() and not line.lstrip().startswith("#")]
        square = rows and all(len(r) == len(rows) for r in rows)
        fmt = "dense" if square and n is None else "triplets"
    if fmt == "dense":
        return parse_dense(text)
    return parse_triplets(text, n)


def cmd_verify(args) -> int:
    a = _read_matrix(args.path, args.format, args.n)
    try:
        jt = jordan_type(a)
    except NotNilpotent:
        print(f"n: {a.n}")
        print("nilpotent: no")
        return EXIT_FAILED
    print(f"n: {a.n}")
    print("nilpotent: yes")
    print(f"ranks: {','.join(str(x) for x in jt.ranks)}")
    print(f"type: {format_partition(jt.partition)}")
    if args.expect is not None and jt.partition != args.expect:
        print(f"expected: {format_partition(args.expect)} -- MISMATCH")
        return EXIT_FAILED
    return EXIT_OK


def cmd_batch(args) -> int:
    if args.max_n < 2:
        print("nothing to test", file=sys.stderr)
        return EXIT_USAGE
    check = not args.no_check or os.environ.get("NILCOMPLETE_CHECK") == "1"
    report = run_batch(args.max_n, jobs=max(1, args.jobs), check=check)
    sys.stdout.write(report.summary())
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_connection(args) -> int:
    form = emit(args.n, args.r, args.lam)
    if args.format == "json":
        sys.stdout.write(form.dumps() + "\n")
    else:
        sys.stdout.write(form.render())
    return EXIT_OK


def cmd_graph(args) -> int:
    if args.initial:
        g = canonical_nr_graph(args.n, args.r)
    else:
        if args.lam is None:
            print("graph: --lambda is required unless --initial is given", file=sys.stderr)
            return EXIT_USAGE
        g = run(args.n, args.r, args.lam, RunOptions.from_env(trace=False)).graph
    text = to_tikz(g) if args.tikz else to_dot(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


COMMANDS = {
    "complete": cmd_complete,
    "verify": cmd_verify,
    "batch": cmd_batch,
    "connection": cmd_connection,
    "graph": cmd_graph,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.cmd](args)
    except NoCompletionExists:
        print("no completion exists: |lambda| > r", file=sys.stderr)
        return EXIT_NO_SOLUTION
    except NilcompleteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
