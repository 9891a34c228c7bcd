"""Command-line entry point: analyze, construct, survey, verify, hunt.

Input graphs are graph6 lines (file or stdin) or generator specs such as
``cycle:7``, ``path:4``, ``complete:3``, ``biclique:2x3``.  Streams for
survey/verify/hunt may also be spec'd as ``cycles:3..12`` or
``catalog:[connected:]1..7``.  JSON output goes to stdout only; diagnostics go
to stderr.  Exit codes: 0 success, 2 usage error, 3 data error, 4 proven
theorem failure (verify).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog as cat
from .classify import class_report
from .constructions import (
    CoronaFamily,
    concatenation_blocks,
    concatenate,
    corona,
    corona_blocks,
    corona_uniform,
    join,
)
from .graph import (
    Graph,
    Graph6Error,
    complete,
    complete_bipartite,
    cycle,
    parse_graph6,
    path,
    write_graph6,
)
from .harness import (
    GRID_THEOREM_IDS,
    HuntTarget,
    SCHEMA_VERSION,
    hunt,
    run_grid,
    survey_catalog,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_THEOREM_FAILURE = 4


class UsageError(ValueError):
    pass


def parse_graph_spec(spec: str) -> Graph:
    """One graph from a generator spec or an inline graph6 string."""
    if ":" in spec:
        kind, _, arg = spec.partition(":")
        try:
            if kind == "cycle":
                return cycle(int(arg))
            if kind == "path":
                return path(int(arg))
            if kind == "complete":
                return complete(int(arg))
            if kind == "biclique":
                p, _, q = arg.partition("x")
                return complete_bipartite(int(p), int(q))
        except ValueError as exc:
            raise UsageError(f"bad generator spec {spec!r}: {exc}") from exc
        raise UsageError(f"unknown generator {kind!r}")
    try:
        return parse_graph6(spec)
    except Graph6Error as exc:
        raise UsageError(f"not a generator spec or graph6 string: {exc}") from exc


def _parse_range(arg: str) -> tuple[int, int]:
    if ".." in arg:
        lo, _, hi = arg.partition("..")
        return int(lo), int(hi)
    return int(arg), int(arg)


def iter_source_lines(source: str, input_path: str | None):
    """graph6 lines from --input, a path, '-', or a stream generator spec."""
    where = input_path or source
    if where is None:
        raise UsageError("no input given")
    if where == "-":
        yield from sys.stdin
        return
    if ":" in where or where.startswith(("cycles", "catalog")):
        kind, _, arg = where.partition(":")
        if kind == "cycles":
            lo, hi = _parse_range(arg)
            if lo < 3:
                raise UsageError("cycles need n >= 3")
            for n in range(lo, hi + 1):
                yield write_graph6(cycle(n))
            return
        if kind == "catalog":
            connected = False
            if arg.startswith("connected:"):
                connected = True
                arg = arg[len("connected:"):]
            lo, hi = _parse_range(arg)
            for g in cat.graphs_up_to(hi, connected=connected, min_n=lo):
                yield write_graph6(g)
            return
        # single-graph generator specs work as one-line streams
        yield write_graph6(parse_graph_spec(where))
        return
    try:
        with open(where) as fh:
            yield from fh
    except OSError as exc:
        raise UsageError(f"cannot read {where!r}: {exc}") from exc


def _out_stream(args):
    if args.output and args.output != "-":
        return open(args.output, "w")
    return sys.stdout


def _close(stream):
    if stream is not sys.stdout:
        stream.close()


def _jobs(args) -> int:
    if args.jobs is not None:
        return args.jobs
    env = os.environ.get("WELLCOVER_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _print_report_table(rep: dict, out):
    order = [
        "graph", "n", "alpha", "mu", "differential", "well_covered",
        "very_well_covered", "one_well_covered", "quasi_regularizable",
        "regularizable", "locally_triangle_free", "w_level", "k_max",
        "shed", "simp", "disjoint_mis_max", "w_convention_diffs",
    ]
    width = max(len(k) for k in order)
    for key in order:
        print(f"{key:<{width}}  {rep[key]}", file=out)


def cmd_analyze(args) -> int:
    g = parse_graph_spec(args.graph)
    rep = class_report(g, k_max=args.kmax).to_json_dict()
    out = _out_stream(args)
    try:
        if args.format == "json":
            print(json.dumps(rep), file=out)
        else:
            _print_report_table(rep, out)
    finally:
        _close(out)
    return EXIT_OK


def cmd_construct(args) -> int:
    operands: dict = {"operator": args.operator}
    if args.operator == "corona":
        if not args.base or not args.parts:
            raise UsageError("corona needs --base and --parts")
        base = parse_graph_spec(args.base)
        parts = [parse_graph_spec(s) for s in args.parts.split(",")]
        if len(parts) == 1:
            g = corona_uniform(base, parts[0])
            fam = CoronaFamily(base, (parts[0],) * base.n)
        else:
            fam = CoronaFamily(base, tuple(parts))
            g = corona(fam)
        operands.update(
            base=write_graph6(base),
            parts=[write_graph6(h) for h in fam.attachments],
            labels={"base": list(range(base.n)), "blocks": corona_blocks(fam)},
        )
    elif args.operator == "join":
        if not args.parts:
            raise UsageError("join needs --parts")
        parts = [parse_graph_spec(s) for s in args.parts.split(",")]
        g = join(parts)
        offsets, at = [], 0
        for h in parts:
            offsets.append(list(range(at, at + h.n)))
            at += h.n
        operands.update(
            parts=[write_graph6(h) for h in parts], labels={"blocks": offsets}
        )
    elif args.operator == "concat":
        if not args.base or not args.part or args.at is None:
            raise UsageError("concat needs --base, --part and --at")
        base = parse_graph_spec(args.base)
        part = parse_graph_spec(args.part)
        g = concatenate(base, part, args.at)
        operands.update(
            base=write_graph6(base),
            part=write_graph6(part),
            at=args.at,
            labels={"copies": concatenation_blocks(base, part, args.at)},
        )
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown operator {args.operator!r}")

    out = _out_stream(args)
    try:
        if args.format == "json":
            doc = {"schema_version": SCHEMA_VERSION, "graph": write_graph6(g)}
            doc.update(operands)
            print(json.dumps(doc), file=out)
        else:
            print(write_graph6(g), file=out)
    finally:
        _close(out)
    return EXIT_OK


def _survey_like(args, verify: bool) -> int:
    lines = iter_source_lines(args.source, args.input)
    filters = {}
    if args.connected:
        filters["connected"] = True
    try:
        report = survey_catalog(
            lines,
            k_max=args.kmax,
            filters=filters,
            strict=args.strict,
            jobs=_jobs(args),
            run_theorems=True,
        )
    except Graph6Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA

    grid_verdicts = []
    if verify and args.include_grids:
        for tid in GRID_THEOREM_IDS:
            grid_verdicts.extend(run_grid(tid))
    grid_failures = [v for v in grid_verdicts if v.applicable and not v.holds]

    out = _out_stream(args)
    try:
        if args.format == "json":
            for record in report.records:
                print(json.dumps(record), file=out)
            for v in grid_verdicts:
                print(json.dumps(v.to_json_dict()), file=out)
            summary = report.to_json_dict()
            summary["grid_failures"] = [v.to_json_dict() for v in grid_failures]
            print(json.dumps(summary), file=out)
        else:
            header = f"{'graph':<16} {'n':>3} {'alpha':>5} {'mu':>3} {'wc':>3} {'vwc':>4} {'1wc':>4} {'w':>2} {'shed':>5}"
            print(header, file=out)
            for record in report.records:
                rep = record["report"]
                print(
                    f"{rep['graph']:<16} {rep['n']:>3} {rep['alpha']:>5} {rep['mu']:>3}"
                    f" {_yn(rep['well_covered']):>3} {_yn(rep['very_well_covered']):>4}"
                    f" {_yn(rep['one_well_covered']):>4} {rep['w_level']:>2}"
                    f" {len(rep['shed']):>5}",
                    file=out,
                )
            print("", file=out)
            for n, agg in report.aggregates.items():
                print(f"n={n}: {agg}", file=out)
            if report.failures or grid_failures:
                print(f"theorem failures: {len(report.failures) + len(grid_failures)}", file=out)
                for v in report.failures + [x.to_json_dict() for x in grid_failures]:
                    print(f"  {v['theorem']} on {v['graph']}: {v['witness']}", file=out)
            else:
                print("theorem failures: 0", file=out)
    finally:
        _close(out)

    if report.parse_errors:
        for line, message in report.parse_errors:
            print(f"line {line}: {message}", file=sys.stderr)
        if args.strict:
            return EXIT_DATA
    if verify and (report.failures or grid_failures):
        return EXIT_THEOREM_FAILURE
    return EXIT_OK


def cmd_survey(args) -> int:
    return _survey_like(args, verify=False)


def cmd_verify(args) -> int:
    return _survey_like(args, verify=True)


def cmd_hunt(args) -> int:
    target = HuntTarget(
        target_id=args.target,
        max_n=args.max_n,
        k=args.k,
        base_max_n=args.base_max_n,
    )
    source = None
    if args.input or args.source:
        source = iter_source_lines(args.source, args.input)
    report = hunt(target, source=source, connected_only=args.connected)
    out = _out_stream(args)
    try:
        if args.format == "json":
            print(json.dumps(report.to_json_dict()), file=out)
        else:
            print(f"target {report.target_id}  bounds {report.parameters}", file=out)
            print(f"checked {report.checked}", file=out)
            for e in report.entries:
                print(f"  {e['graph']}  n={e['n']} connected={e['connected']}", file=out)
            for c in report.counterexamples:
                print(f"  counterexample: {c}", file=out)
            print(f"summary {report.summary}", file=out)
    finally:
        _close(out)
    return EXIT_OK


def _yn(flag: bool) -> str:
    return "y" if flag else "."


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wellcover",
        description="Well-coveredness hierarchy toolkit: classify graphs, "
        "verify the supporting theory, and hunt for counterexamples.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_source=False):
        p.add_argument("--input", "-i", help="graph6 file, or - for stdin")
        p.add_argument("--output", "-o", help="output path (default stdout)")
        p.add_argument("--format", choices=("json", "table"), default="table")
        p.add_argument("--kmax", type=int, default=3, help="largest hierarchy level probed")
        p.add_argument("--strict", action="store_true", help="promote parse errors to fatal")
        p.add_argument("--jobs", type=int, default=None,
                       help="parallel workers (default $WELLCOVER_JOBS or 1)")
        if with_source:
            p.add_argument(
                "source",
                nargs="?",
                help="graph6 file, '-', or a stream spec such as cycles:3..12 "
                "or catalog:connected:1..7",
            )
            p.add_argument("--connected", action="store_true",
                           help="skip disconnected input graphs")

    p = sub.add_parser("analyze", help="full hierarchy report for one graph")
    p.add_argument("graph", help="graph6 string or generator spec (cycle:7, biclique:2x3, ...)")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="build corona / join / concatenation graphs")
    p.add_argument("operator", choices=("corona", "join", "concat"))
    p.add_argument("--base", help="base graph spec")
    p.add_argument("--parts", help="comma-separated graph specs (corona/join)")
    p.add_argument("--part", help="graph copied onto each base vertex (concat)")
    p.add_argument("--at", type=int, help="fused vertex of the copied graph (concat)")
    common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("survey", help="classify every graph of a stream")
    common(p, with_source=True)
    p.set_defaults(func=cmd_survey, include_grids=False)

    p = sub.add_parser("verify", help="run every registered theorem over a stream")
    common(p, with_source=True)
    p.add_argument("--include-grids", action="store_true",
                   help="also run the construction-grid theorems at default bounds")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hunt", help="run a conjecture/problem hunt")
    p.add_argument("target", choices=(
        "conjecture.wk-concat",
        "problem.no-shedding",
        "problem.two-disjoint-mis-girth5",
        "problem.w2-alpha2",
        "problem.alpha-plus-mu",
    ))
    p.add_argument("--max-n", type=int, default=8, help="largest order searched")
    p.add_argument("--k", type=int, default=3, help="hierarchy level of the conjecture source")
    p.add_argument("--base-max-n", type=int, default=3,
                   help="largest base order for the concatenation conjecture")
    common(p, with_source=True)
    p.set_defaults(func=cmd_hunt)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Graph6Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
