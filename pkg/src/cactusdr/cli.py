"""Command-line front end.

Exit codes: 0 success / all suites pass, 1 verification or connectivity
failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
import time

from .errors import CactusError, DisconnectedGraphError, ParseError, GraphError
from .exact import format_rational
from .families import Family, build
from .formats import emit_graph6, parse_edge_list, parse_graph6, read_graph6_lines
from .harness import SUITES, rank_extremal, run_suite
from .invariants import invariant_report
from .resistance import effective_resistance, resistance_matrix

log = logging.getLogger("cactusdr")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _looks_like_edge_list(text: str) -> bool:
    # graph6 lines never contain inner whitespace
    return any(len(line.split()) > 1 for line in text.splitlines())


def load_graphs(text: str, fmt: str = "auto"):
    """Yield (line number, graph or exception) for every graph in ``text``."""
    if fmt == "edgelist" or (fmt == "auto" and _looks_like_edge_list(text)):
        try:
            yield 1, parse_edge_list(text)
        except CactusError as exc:
            yield 1, exc
        return
    for lineno, s in read_graph6_lines(text):
        try:
            yield lineno, parse_graph6(s)
        except CactusError as exc:
            yield lineno, exc


def cmd_invariants(args) -> int:
    status = EXIT_OK
    for lineno, g in load_graphs(_read(args.file), args.format):
        if isinstance(g, Exception):
            print(f"line {lineno}: parse error: {g}", file=sys.stderr)
            status = EXIT_USAGE
            continue
        try:
            report = invariant_report(g)
        except DisconnectedGraphError as exc:
            print(f"line {lineno}: {exc}", file=sys.stderr)
            status = max(status, EXIT_FAIL)
            continue
        print(report.to_json())
    return status


def cmd_resistance(args) -> int:
    graphs = list(load_graphs(_read(args.file), args.format))
    if not graphs:
        print("no graph in input", file=sys.stderr)
        return EXIT_USAGE
    lineno, g = graphs[0]
    if isinstance(g, Exception):
        print(f"line {lineno}: parse error: {g}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.pair:
            u, v = args.pair
            print(json.dumps({"u": u, "v": v, "resistance": format_rational(effective_resistance(g, u, v))}))
        else:
            print(resistance_matrix(g).to_json())
    except DisconnectedGraphError as exc:
        print(f"line {lineno}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except GraphError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_construct(args) -> int:
    fam = Family(args.family)
    g = build(fam, n=args.n, t=args.t, h=args.h)
    if fam.inferred:
        print(f"note: {fam.name} shape is inferred from its difference formula", file=sys.stderr)
    print(emit_graph6(g))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    from .enumeration import enumerate_cacti

    start = time.perf_counter()
    corpus = enumerate_cacti(args.n, args.t, workers=args.workers)
    lines = [emit_graph6(g) for g in corpus.graphs]
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("".join(s + "\n" for s in lines))
    else:
        for s in lines:
            print(s)
    if args.manifest:
        with open(args.manifest, "w") as fh:
            json.dump({"n": args.n, "t": args.t, "count": len(corpus)}, fh)
    log.info("Cact(%d,%d): %d graphs in %.2fs", args.n, args.t, len(corpus), time.perf_counter() - start)
    return EXIT_OK


def cmd_rank(args) -> int:
    entries = rank_extremal(args.n, args.t, args.top)
    rows = [e.to_dict() for e in entries]
    if args.csv:
        writer = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]) if rows else ["rank"])
        writer.writeheader()
        writer.writerows(rows)
    else:
        for r in rows:
            print(json.dumps(r))
    for e in entries:
        if e.tied:
            print(f"warning: rank {e.rank} ties another graph at dr={format_rational(e.dr)}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        start = time.perf_counter()
        outcome = run_suite(name)
        elapsed = time.perf_counter() - start
        ok &= outcome.overall
        if args.json:
            print(outcome.to_json(verbose=args.verbose))
            continue
        verdict = "PASS" if outcome.overall else "FAIL"
        print(f"[{verdict}] {name}: {len(outcome.checks) - len(outcome.failures)}/{len(outcome.checks)} checks ({elapsed:.1f}s)")
        for c in outcome.failures:
            print(f"    FAIL {c.description}: expected {c.to_dict()['expected']}, got {c.to_dict()['actual']}")
        for c in outcome.diagnostics:
            print(f"    diag {c.description}: {c.to_dict()['actual']}")
        for note in outcome.notes:
            print(f"    note {note}")
        if args.verbose:
            for c in outcome.checks:
                if c.passed:
                    print(f"    ok   {c.description}")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cactusdr", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--log-level", default="WARNING")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariants", help="JSON invariant report per input graph")
    s.add_argument("file", help="graph6 corpus or edge-list file, '-' for stdin")
    s.add_argument("--format", choices=["auto", "graph6", "edgelist"], default="auto")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("resistance", help="exact effective resistances of the first input graph")
    s.add_argument("file")
    s.add_argument("--format", choices=["auto", "graph6", "edgelist"], default="auto")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--pair", nargs=2, type=int, metavar=("U", "V"))
    g.add_argument("--all", action="store_true")
    s.set_defaults(func=cmd_resistance)

    s = sub.add_parser("construct", help="emit a family member as graph6")
    s.add_argument("--family", required=True, choices=[f.value for f in Family])
    s.add_argument("--n", type=int)
    s.add_argument("--t", type=int)
    s.add_argument("--h", type=int)
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("enumerate", help="all non-isomorphic cacti in Cact(n, t)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--out")
    s.add_argument("--manifest", help="write {n, t, count} JSON here")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("rank", help="smallest degree resistance distances in Cact(n, t)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--top", type=int, default=3)
    s.add_argument("--csv", action="store_true")
    s.set_defaults(func=cmd_rank)

    s = sub.add_parser("verify", help="run verification suites")
    s.add_argument("--suite", required=True, choices=list(SUITES) + ["all"])
    s.add_argument("--json", action="store_true")
    s.add_argument("--verbose", action="store_true")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (ParseError, CactusError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
