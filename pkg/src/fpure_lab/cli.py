"""Command-line front end: ``fpure-lab <command> ...``.

Exit codes: 0 success, 1 failed assertion or contradiction, 2 usage or parse
error, 3 timeout verdict.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .bei import cut_sets, is_unmixed, koenig_type, minimal_primes, non_fpurity_certificate
from .cache import ENV_VAR, GBCache
from .families import parse_family
from .fedder import TIMEOUT, fedder
from .graphs import Graph, GraphInputError, format_edge_list, parse_edge_list, read_graph
from .poly import GREVLEX, LEX, Effort, codimension, is_prime
from .recognition import chordality, find_asteroidal_triple, gallai_forbidden_witness, is_weakly_closed

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_TIMEOUT = 0, 1, 2, 3

_ORDERS = {"grevlex": GREVLEX, "lex": LEX}


class UsageError(Exception):
    pass


def load_graph(arg: str) -> Graph:
    """A graph from an edge-list file, ``-`` for stdin, or a family spec."""
    if arg == "-":
        return parse_edge_list(sys.stdin.read())
    if os.path.exists(arg):
        return read_graph(arg)
    return parse_family(arg)


def _emit(obj, args) -> None:
    text = json.dumps(obj, indent=2, sort_keys=False)
    print(text)
    if getattr(args, "json", None):
        Path(args.json).write_text(text + "\n")


def _effort(args) -> Effort:
    if args.budget is not None and args.budget <= 0:
        raise UsageError("--budget must be positive")
    if args.timeout is not None and args.timeout <= 0:
        raise UsageError("--timeout must be positive")
    return Effort(max_reductions=args.budget, max_seconds=args.timeout)


def _cache(args) -> GBCache | None:
    return GBCache.from_env(args.cache)


# commands ----------------------------------------------------------------------------------

def cmd_gen(args) -> int:
    g = parse_family(args.spec)
    text = format_edge_list(g)
    if args.output:
        Path(args.output).write_text(text)
        print(f"{g.n} {g.m}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def classify(g: Graph) -> dict:
    ch = chordality(g)
    at = find_asteroidal_triple(g)
    wit = gallai_forbidden_witness(g)
    kt = koenig_type(g) if g.m else None
    cert = non_fpurity_certificate(g)
    return {
        "n": g.n,
        "m": g.m,
        "weakly_closed": is_weakly_closed(g),
        "at_free": at is None,
        "chordal": ch.chordal,
        "gallai_witness": wit[0] if wit else None,
        "asteroidal_triple": list(at) if at else None,
        "cut_set_count": len(cut_sets(g)),
        "unmixed": is_unmixed(g),
        "koenig_type": [list(p) for p in kt.paths] if kt is not None else None,
        "non_fpurity_certificate": list(cert) if cert else None,
    }


def cmd_classify(args) -> int:
    _emit(classify(load_graph(args.graph)), args)
    return EXIT_OK


def cmd_fpure(args) -> int:
    g = load_graph(args.graph)
    r = fedder(g, args.p, method=args.method, order=_ORDERS[args.order], budget=_effort(args),
               name=args.name or args.graph, cache=_cache(args))
    _emit(r.to_dict(), args)
    return EXIT_TIMEOUT if r.verdict == TIMEOUT else EXIT_OK


def cmd_table1(args) -> int:
    from .table1 import PRIMES, ROWS, render, run_table

    primes = tuple(args.primes) if args.primes else PRIMES
    for p in primes:
        if p not in PRIMES:
            raise UsageError(f"characteristic {p} is not a column of the table")
    rows = tuple(args.rows) if args.rows else ROWS
    for r in rows:
        if r not in ROWS:
            raise UsageError(f"unknown row {r!r}; choose from {', '.join(ROWS)}")
    cells = run_table(rows, primes, budget=args.budget or 10_000_000, seconds=args.timeout, jobs=args.jobs)
    print(render(cells), file=sys.stderr)
    _emit([c.to_dict() for c in cells], args)
    bad = [c for c in cells if c.contradicts]
    if bad:
        for c in bad:
            print(f"CONTRADICTION {c.graph} p={c.p}: computed {c.symbol}, published {c.paper}; "
                  f"{json.dumps(c.to_dict())}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verifier import run_selection, write_findings

    results = run_selection(args.selection, max_n=args.max_n)
    for r in results:
        tag = r.outcome.upper() + ("" if r.hard else " (probe)")
        print(f"{tag:16} {r.check} {json.dumps(r.params, sort_keys=True)} {r.elapsed_ms}ms", file=sys.stderr)
        if r.outcome == "fail" and r.hard:
            print(f"  counterexample: {json.dumps(r.counterexample)}", file=sys.stderr)
    if args.json:
        write_findings(results, args.json)
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def cmd_primes(args) -> int:
    from .bei import bei

    g = load_graph(args.graph)
    out = []
    ring = bei(g, args.p).ring if args.check else None
    bad = 0
    for pc in minimal_primes(g):
        d = {"cut_set": sorted(pc.cut.s), "components": [list(c) for c in pc.comps], "height": pc.height}
        if args.check:
            d["codimension"] = codimension(pc.ideal(ring))
            bad += d["codimension"] != pc.height
        out.append(d)
    _emit({"n": g.n, "unmixed": is_unmixed(g), "primes": out}, args)
    return EXIT_FAIL if bad else EXIT_OK


def cmd_experiment(args) -> int:
    """Open converse: weakly closed and unmixed graphs that are not of König type."""
    from .enumerate import connected_graphs_upto
    from .graphs import format_edge_list as fmt

    rows = []
    for g in connected_graphs_upto(args.max_n):
        if g.m == 0 or not is_unmixed(g) or not is_weakly_closed(g):
            continue
        r = fedder(g, args.p)
        if r.fpure and koenig_type(g) is None:
            rows.append(fmt(g).strip().replace("\n", "; "))
    _emit({"question": "weakly closed, unmixed, F-pure, not Koenig type", "p": args.p, "max_n": args.max_n,
           "examples": rows}, args)
    return EXIT_OK


# parser ------------------------------------------------------------------------------------

def _prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=_prime, default=2, help="characteristic (prime)")
    common.add_argument("--budget", type=int, default=None, help="reduction budget")
    common.add_argument("--timeout", type=float, default=None, help="wall-clock backstop in seconds")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")
    common.add_argument("--json", metavar="PATH", help="also write JSON output here")
    common.add_argument("--cache", metavar="DIR", help=f"reduced-GB cache directory (env {ENV_VAR} wins)")

    ap = argparse.ArgumentParser(prog="fpure-lab", description="F-purity of binomial edge ideals.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", parents=[common], help="write a named graph as an edge list")
    s.add_argument("spec", help="family spec, e.g. coXF1:n=0, cycle:7, complement:cycle:7, net")
    s.add_argument("-o", "--output", help="output file (default stdout)")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("classify", parents=[common], help="combinatorial report for a graph")
    s.add_argument("graph", help="edge-list file, '-' or family spec")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("fpure", parents=[common], help="Fedder test")
    s.add_argument("graph", help="edge-list file, '-' or family spec")
    s.add_argument("--method", choices=("graded", "colon"), default="graded")
    s.add_argument("--name", help="graph id for the report")
    s.set_defaults(func=cmd_fpure)

    s = sub.add_parser("table1", parents=[common], help="co-regular families across characteristics")
    s.add_argument("--primes", type=_prime, nargs="+")
    s.add_argument("--rows", nargs="+")
    s.set_defaults(func=cmd_table1)

    s = sub.add_parser("verify", parents=[common], help="run the lemma checks")
    from .verifier import SELECTIONS

    s.add_argument("selection", nargs="?", default="all", choices=SELECTIONS)
    s.add_argument("--max-n", type=int, default=5)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("primes", parents=[common], help="minimal primes and heights")
    s.add_argument("graph", help="edge-list file, '-' or family spec")
    s.add_argument("--check", action="store_true", help="cross-check heights by GB codimension")
    s.set_defaults(func=cmd_primes)

    s = sub.add_parser("experiment", parents=[common], help="exploratory runs (never asserted)")
    s.add_argument("name", choices=("koenig-converse",))
    s.add_argument("--max-n", type=int, default=5)
    s.set_defaults(func=cmd_experiment)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, GraphInputError, OSError) as e:
        print(f"fpure-lab: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
