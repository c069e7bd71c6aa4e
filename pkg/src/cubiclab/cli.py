"""Command line: ``cubiclab {generate,analyze,scan,verify-counterexample,crosscheck}``.

Exit status is 0 on success, 1 when a verification fails and 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Iterator, Optional, Sequence, TextIO

from . import analysis, constructions
from .codec import AdjListError, Graph6Error, decode_graph6, encode_graph6, read_adjlist, write_adjlist
from .generator import VALID_GIRTHS, GenSpec, generate, generate_split
from .graph import Graph, GraphError

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputRecord:
    __slots__ = ("lineno", "graph", "error")

    def __init__(self, lineno: int, graph: Optional[Graph] = None, error: Optional[str] = None):
        self.lineno = lineno
        self.graph = graph
        self.error = error


def _read_stream(fh: TextIO) -> Iterator[InputRecord]:
    text = fh.read()
    if ":" in text:
        try:
            yield InputRecord(1, read_adjlist(text))
        except (AdjListError, GraphError) as exc:
            yield InputRecord(1, error=str(exc))
        return
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        try:
            yield InputRecord(lineno, decode_graph6(line))
        except (Graph6Error, GraphError) as exc:
            yield InputRecord(lineno, error=str(exc))


def read_inputs(paths: Sequence[str], stdin: TextIO) -> Iterator[InputRecord]:
    """graph6 lines, or one adjacency-list document per file."""
    if not paths:
        yield from _read_stream(stdin)
        return
    for p in paths:
        if p == "-":
            yield from _read_stream(stdin)
        else:
            with open(p) as fh:
                yield from _read_stream(fh)


def _parse_split(text: str) -> tuple[int, int]:
    try:
        k, m = (int(x) for x in text.split("/"))
    except ValueError:
        raise argparse.ArgumentTypeError("expected k/m, e.g. 0/4") from None
    if m < 1 or not 0 <= k < m:
        raise argparse.ArgumentTypeError(f"need 0 <= k < m, got {text}")
    return k, m


def _spec(args) -> GenSpec:
    return GenSpec(args.n, args.girth)


def cmd_generate(args, out: TextIO) -> int:
    spec = _spec(args)
    graphs = generate(spec) if args.split is None else generate_split(spec, *args.split)
    if args.count_only:
        out.write(f"{sum(1 for _ in graphs)}\n")
        return EXIT_OK
    for g in graphs:
        out.write(encode_graph6(g) + "\n")
    return EXIT_OK


def _analyze_one(item):
    g, fields = item
    return analysis.analyze(g, fields)


def cmd_analyze(args, out: TextIO, stdin: TextIO) -> int:
    fields = tuple(args.fields.split(",")) if args.fields else None
    if fields:
        bad = set(fields) - set(analysis.FIELDS)
        if bad:
            sys.stderr.write(f"unknown fields: {', '.join(sorted(bad))}\n")
            return EXIT_INPUT
    records = list(read_inputs(args.inputs, stdin))
    graphs = [r.graph for r in records if r.graph is not None]
    if fields is None:
        base = analysis.default_fields(max((g.n for g in graphs), default=0))
        shown = base + (("witnesses",) if args.witnesses else ())
    else:
        shown = fields
    out.write(analysis.header(shown) + "\n")
    jobs = [(r.graph, shown) for r in records if r.graph is not None]
    if args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(args.jobs) as pool:
            reports = iter(list(pool.map(_analyze_one, jobs)))
    else:
        reports = map(_analyze_one, jobs)
    status = EXIT_OK
    for rec in records:
        if rec.error is not None:
            out.write(f"# error\tline {rec.lineno}\t{rec.error}\n")
            status = EXIT_INPUT
            continue
        rep = next(reports)
        out.write(analysis.format_report(rep, shown) + "\n")
        for prob in rep.problems():
            out.write(f"# inconsistent\tline {rec.lineno}\t{prob}\n")
            if status == EXIT_OK:
                status = EXIT_FAIL
    return status


def cmd_scan(args, out: TextIO) -> int:
    def progress(s):
        out.write(
            f"# order {s.n}\tgraphs={s.graphs}\tpseudo_2fi={s.pseudo_2fi}"
            f"\t2fh={s.two_factor_hamiltonian}\tsurvivors={s.survivors}\n"
        )
        out.flush()

    res = analysis.scan(args.n_max, args.girth, jobs=args.jobs, progress=progress)
    fields = tuple(f for f in analysis.FIELDS if f != "witnesses")
    out.write(analysis.header(fields) + "\n")
    for g in res.survivors:
        out.write(analysis.format_report(analysis.analyze(g, fields), fields) + "\n")
    out.write(f"# survivors {len(res.survivors)}\n")
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    g = None
    if args.graph:
        recs = list(read_inputs([args.graph], sys.stdin))
        if len(recs) != 1 or recs[0].graph is None:
            sys.stderr.write(f"cannot read a single graph from {args.graph}\n")
            return EXIT_INPUT
        g = recs[0].graph
    checks = analysis.verify_counterexample(g)
    for c in checks:
        out.write(f"{'PASS' if c.passed else 'FAIL'}\t{c.name}\t{c.observed}\n")
    failed = [c for c in checks if not c.passed]
    out.write(f"# {len(checks) - len(failed)}/{len(checks)} checks passed\n")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_crosscheck(args, out: TextIO, stdin: TextIO) -> int:
    records = list(read_inputs(args.inputs, stdin))
    status = EXIT_OK
    for r in records:
        if r.error is not None:
            out.write(f"# error\tline {r.lineno}\t{r.error}\n")
            status = EXIT_INPUT
    good = [r for r in records if r.graph is not None]
    res = analysis.crosscheck(r.graph for r in good)
    for i in res.skipped:
        out.write(f"# skipped\tline {good[i].lineno}\tnot cubic\n")
    if res.first_disagreement is not None:
        i, a, b = res.first_disagreement
        out.write(f"# disagreement\tline {good[i].lineno}\tdirect={a}\tmatching={b}\n")
        status = EXIT_FAIL
    out.write(f"agreement {res.agreed}/{res.compared}\n")
    return status


def seed_fixtures(directory: str | Path) -> list[Path]:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    written = []
    for name, g in constructions.named_items().items():
        for suffix, text in ((".g6", encode_graph6(g) + "\n"), (".adj", write_adjlist(g))):
            p = d / f"{name}{suffix}"
            p.write_text(text)
            written.append(p)
    return written


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cubiclab", description=__doc__.splitlines()[0])
    p.add_argument("--seed-fixtures", metavar="DIR", help="write named graphs as .g6 and .adj files")
    sub = p.add_subparsers(dest="command")

    g = sub.add_parser("generate", help="isomorph-free cubic bipartite graphs as graph6")
    g.add_argument("-n", type=int, required=True, help="number of vertices (even)")
    g.add_argument("-g", "--girth", type=int, default=6, help="minimum girth: 4, 6 or 8")
    g.add_argument("--split", type=_parse_split, help="run share k of m, written k/m")
    g.add_argument("--count-only", action="store_true")

    a = sub.add_parser("analyze", help="one report line per input graph")
    a.add_argument("inputs", nargs="*", help="graph6 files or adjacency-list files (default stdin)")
    a.add_argument("--fields", help="comma-separated subset of: " + ",".join(analysis.FIELDS))
    a.add_argument("--witnesses", action="store_true", help="append witness column")
    a.add_argument("-j", "--jobs", type=int, default=1)

    s = sub.add_parser("scan", help="essentially 4-edge-connected pseudo-2FI graphs up to n_max")
    s.add_argument("n_max", type=int)
    s.add_argument("-g", "--girth", type=int, default=6)
    s.add_argument("-j", "--jobs", type=int, default=1)

    v = sub.add_parser("verify-counterexample", help="checklist for the 30-vertex counterexample")
    v.add_argument("--graph", help="check this adjacency-list or graph6 file instead")

    c = sub.add_parser("crosscheck", help="compare the two 2-factor enumerators")
    c.add_argument("inputs", nargs="*")
    return p


def main(argv: Optional[Sequence[str]] = None, out: TextIO | None = None, stdin: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    stdin = sys.stdin if stdin is None else stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.seed_fixtures:
        for path in seed_fixtures(args.seed_fixtures):
            out.write(f"{path}\n")
        if args.command is None:
            return EXIT_OK
    try:
        if args.command == "generate":
            return cmd_generate(args, out)
        if args.command == "analyze":
            return cmd_analyze(args, out, stdin)
        if args.command == "scan":
            if args.girth not in VALID_GIRTHS:
                raise ValueError(f"girth must be one of {VALID_GIRTHS}")
            return cmd_scan(args, out)
        if args.command == "verify-counterexample":
            return cmd_verify(args, out)
        if args.command == "crosscheck":
            return cmd_crosscheck(args, out, stdin)
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"cubiclab: {exc}\n")
        return EXIT_INPUT
    parser.print_help(out)
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
