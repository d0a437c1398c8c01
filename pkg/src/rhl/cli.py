"""Command-line entry point: ``rhl <subcommand> ...``.

Exit codes: 0 success, 1 negative finding, 2 inconclusive search,
3 usage or file error, 4 theorem violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import acceptance
from .certifiers import certificate_from_json, certificate_failure, certify
from .constructions import (
    COMPLETE_CASES,
    CONSTRUCTIONS,
    TRIPARTITE_CASES,
    build,
    canonical_name,
    sample_structured,
)
from .errors import (
    BadParameters,
    ParseError,
    PreconditionFailed,
    RHLError,
    TheoremViolation,
    TooLarge,
)
from .hypergraph import Coloring, HostGraph, dumps_coloring, read_coloring, write_coloring
from .patterns import Pattern, find_monochromatic_copy, find_rainbow_copy, get_pattern, read_pattern
from .search import (
    PROVED,
    SearchBudget,
    canonical_existence_check,
    constrained_ramsey_check,
    default_budget_secs,
    max_rainbow_free_colors,
    ramsey2_search,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_INCONCLUSIVE, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


class Report:
    """Ordered key/value record printed as text lines or one JSON object."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.items: list[tuple[str, object]] = []
        self.blob: dict | None = None

    def add(self, key: str, value) -> None:
        self.items.append((key, value))

    def emit(self, out=None) -> None:
        out = out or sys.stdout
        if self.fmt == "json":
            repeated = {k for k, _ in self.items if sum(1 for j, _ in self.items if j == k) > 1}
            d: dict = {}
            for k, v in self.items:
                v = v if isinstance(v, (int, float, str)) else str(v)
                if k in repeated:
                    d.setdefault(k, []).append(v)
                else:
                    d[k] = v
            if self.blob is not None:
                d["certificate"] = self.blob
            print(json.dumps(d), file=out)
            return
        for k, v in self.items:
            print(f"{k}: {v}", file=out)
        if self.blob is not None:
            print(json.dumps(self.blob), file=out)


def _pattern_arg(text: str) -> Pattern:
    if os.path.exists(text):
        return read_pattern(text)
    try:
        return get_pattern(text)
    except KeyError:
        raise UsageError(f"unknown pattern {text!r} (and no such file)") from None


def _embedding_text(emb) -> str:
    return " ".join("{" + ",".join(map(str, e)) + "}" for e in emb.host_edges())


def _budget(args) -> SearchBudget:
    secs = args.budget_secs if args.budget_secs is not None else default_budget_secs()
    try:
        return SearchBudget(node_limit=args.budget_nodes, time_limit=secs, threads=args.threads)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _write_witness(args, c: Coloring | None, report: Report) -> None:
    if c is None or not getattr(args, "witness_out", None):
        return
    write_coloring(args.witness_out, c)
    report.add("witness_file", args.witness_out)


# --- subcommands ----------------------------------------------------------------


def cmd_gen(args, report: Report) -> int:
    key = canonical_name(args.construction)
    J = None
    if args.J is not None:
        try:
            J = [int(x) for x in args.J.split(",") if x.strip()]
        except ValueError:
            raise UsageError(f"--J expects a comma-separated list, got {args.J!r}") from None
    if key in COMPLETE_CASES or key in TRIPARTITE_CASES:
        if args.n is None:
            raise UsageError("--n is required for sampled colorings")
        c = sample_structured(key, args.n, args.seed)
    elif key in CONSTRUCTIONS:
        c = build(key, n=args.n, J=J, sizes=tuple(args.sizes) if args.sizes else None)
    else:
        raise UsageError(f"unknown construction {args.construction!r}")
    text = dumps_coloring(c)
    if args.output in (None, "-"):
        sys.stdout.write(text)
        return EXIT_OK
    Path(args.output).write_text(text, encoding="utf-8")
    report.add("construction", key)
    report.add("host", c.host)
    report.add("palette", c.palette_size)
    report.add("output", args.output)
    return EXIT_OK


def cmd_check(args, report: Report) -> int:
    c = read_coloring(args.file)
    p = _pattern_arg(args.pattern)
    report.add("pattern", p.name)
    report.add("palette", c.palette_size)
    kind = "monochromatic" if args.mono else "rainbow"
    emb = find_monochromatic_copy(c, p) if args.mono else find_rainbow_copy(c, p)
    if emb is None:
        report.add(kind, "none")
        return EXIT_OK
    report.add(kind, "found")
    report.add("witness", _embedding_text(emb))
    report.add("witness_vertices", " ".join(map(str, emb.images)))
    report.add("witness_edge_ids", " ".join(map(str, emb.edge_images)))
    return EXIT_NEGATIVE


def cmd_certify(args, report: Report) -> int:
    c = read_coloring(args.file)
    report.add("theorem", args.theorem)
    if args.cert:
        try:
            cert = certificate_from_json(Path(args.cert).read_text(encoding="utf-8"))
        except OSError as exc:
            raise UsageError(str(exc)) from None
        why = certificate_failure(c, cert)
        report.add("case", cert.case)
        report.add("verified", "yes" if why is None else "no")
        if why is not None:
            report.add("failing_clause", why)
            return EXIT_NEGATIVE
        return EXIT_OK
    try:
        result = certify(c, args.theorem)
    except PreconditionFailed as exc:
        report.add("status", "rejected")
        report.add("reason", exc.reason)
        if exc.witness is not None:
            report.add("witness", _embedding_text(exc.witness))
        return EXIT_NEGATIVE
    if hasattr(result, "label"):  # messy verdict
        report.add("status", result.label)
        report.add("palette", result.palette_size)
        if result.witness is not None:
            report.add("witness", _embedding_text(result.witness))
        return EXIT_OK
    report.add("status", "accepted")
    report.add("case", result.case)
    report.blob = result.to_json(c.host)
    if args.cert_out:
        Path(args.cert_out).write_text(json.dumps(report.blob) + "\n", encoding="utf-8")
        report.add("certificate_file", args.cert_out)
    return EXIT_OK


def _host_from_args(args) -> HostGraph:
    try:
        if args.host == "complete":
            return HostGraph.complete(args.n)
        return HostGraph.tripartite(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_ar(args, report: Report) -> int:
    host = _host_from_args(args)
    p = _pattern_arg(args.pattern)
    if p.num_edges < 2:
        raise UsageError("pattern needs at least two edges")
    out = max_rainbow_free_colors(host, p, _budget(args))
    report.add("host", host)
    report.add("pattern", p.name)
    report.add("status", out.status)
    if out.status == PROVED:
        report.add("value", out.value + 1)
        report.add("max_colors", out.value)
    else:
        report.add("lower_bound", out.value + 1)
    report.add("nodes", out.nodes)
    report.add("elapsed", f"{out.elapsed:.3f}")
    _write_witness(args, out.witness, report)
    return EXIT_OK if out.status == PROVED else EXIT_INCONCLUSIVE


def cmd_ramsey2(args, report: Report) -> int:
    host = _host_from_args(args)
    h = _pattern_arg(args.target)
    out = ramsey2_search(host, h, _budget(args))
    report.add("host", host)
    report.add("target", h.name)
    report.add("status", out.status)
    if out.status == PROVED:
        report.add("witness", "found" if out.witness is not None else "none")
    report.add("nodes", out.nodes)
    report.add("elapsed", f"{out.elapsed:.3f}")
    _write_witness(args, out.witness, report)
    return EXIT_OK if out.status == PROVED else EXIT_INCONCLUSIVE


def cmd_constrained(args, report: Report) -> int:
    h = _pattern_arg(args.target)
    path = get_pattern(args.path)
    r = constrained_ramsey_check(h, path, _budget(args), n_max=args.n_max)
    report.add("target", h.name)
    report.add("path", path.name)
    report.add("status", r.status)
    report.add("R2", r.r2 if r.r2 is not None else "unknown")
    report.add("f", r.f if r.f is not None else "unknown")
    report.add("hypothesis", r.hypothesis)
    report.add("hypothesis_met", "yes" if r.hypothesis_met else "no")
    report.add("equality", "asserted" if r.equality_asserted else "not asserted")
    for line in r.trace:
        report.add("trace", line)
    _write_witness(args, r.r2_witness, report)
    if r.status != PROVED:
        return EXIT_INCONCLUSIVE
    return EXIT_OK if r.hypothesis_met else EXIT_NEGATIVE


def cmd_canonical(args, report: Report) -> int:
    h = _pattern_arg(args.H)
    g = _pattern_arg(args.G)
    table = canonical_existence_check(h, g, args.t, args.host)
    report.add("host", args.host)
    report.add("t", args.t)
    report.add("H", h.name)
    report.add("G", g.name)
    for row in table.rows:
        J = "{" + ",".join(map(str, row.J)) + "}"
        report.add("row", f"J={J} palette={row.palette} mono={str(row.mono).lower()} "
                          f"rainbow={str(row.rainbow).lower()}")
    report.add("exists_at_t", "yes" if table.exists else "no")
    return EXIT_OK if table.exists else EXIT_NEGATIVE


def cmd_verify(args, report: Report) -> int:
    if args.suite != "all" and args.suite not in acceptance.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(acceptance.SUITES)}")
    results = acceptance.run_suite(args.suite, threads=args.threads)
    for r in results:
        report.add("criterion", f"{r.number} {r.name} {r.status}")
        for label, ok in r.checks:
            report.add("check", f"{r.number} {'ok' if ok else 'FAILED'} {label}")
        for note in r.notes:
            report.add("note", f"{r.number} {note}")
    if any(r.status == "INCONCLUSIVE" for r in results):
        return EXIT_INCONCLUSIVE
    return EXIT_OK if all(r.passed for r in results) else EXIT_NEGATIVE


# --- parser -----------------------------------------------------------------------


def _add_budget(p):
    p.add_argument("--budget-nodes", type=int, default=None, help="node limit")
    p.add_argument("--budget-secs", type=float, default=None,
                   help="wall-clock limit (default: $RHL_DEFAULT_BUDGET_SECS, else none)")
    p.add_argument("--witness-out", default=None, help="write the witness coloring here")


def _add_host(p):
    p.add_argument("--host", choices=("complete", "tripartite"), default="complete")
    p.add_argument("--n", type=int, required=True, help="vertex count, or part size for tripartite")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rhl", description="Rainbow path search and certification for 3-uniform hypergraphs.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="write a construction or a structured sample")
    p.add_argument("--construction", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--sizes", type=int, nargs=3, help="part sizes for J_CANONICAL")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--J", default=None, help="comma-separated subset of 1,2,3")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="look for a rainbow (or monochromatic) copy")
    p.add_argument("--pattern", required=True)
    p.add_argument("--mono", action="store_true", help="look for a monochromatic copy instead")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("certify", help="certify a coloring against a structure theorem")
    p.add_argument("--theorem", required=True,
                   choices=("tight", "messy", "loose", "loose-plus", "mp-tight", "mp-messy", "mp-loose"))
    p.add_argument("--cert", default=None, help="verify this certificate instead of searching")
    p.add_argument("--cert-out", default=None)
    p.add_argument("file")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("ar", help="anti-Ramsey number by exhaustive search")
    _add_host(p)
    p.add_argument("--pattern", required=True)
    _add_budget(p)
    p.set_defaults(func=cmd_ar)

    p = sub.add_parser("ramsey2", help="2-coloring without a monochromatic target")
    _add_host(p)
    p.add_argument("--target", required=True)
    _add_budget(p)
    p.set_defaults(func=cmd_ramsey2)

    p = sub.add_parser("constrained", help="compare f(H, path) with R2(H)")
    p.add_argument("--target", required=True)
    p.add_argument("--path", required=True, choices=("T", "M", "L"))
    p.add_argument("--n-max", type=int, default=9)
    _add_budget(p)
    p.set_defaults(func=cmd_constrained)

    p = sub.add_parser("canonical", help="J-canonical existence table")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--host", choices=("ordered", "tripartite"), required=True)
    p.add_argument("--H", required=True, help="target pattern name or file")
    p.add_argument("--G", required=True, help="rainbow pattern name or file")
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("verify", help="run an acceptance bundle")
    p.add_argument("--suite", required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    if args.threads < 1:
        print("rhl: error: --threads must be positive", file=sys.stderr)
        return EXIT_USAGE
    report = Report(args.format)
    try:
        code = args.func(args, report)
    except UsageError as exc:
        print(f"rhl: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, BadParameters, TooLarge, KeyError) as exc:
        print(f"rhl: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"rhl: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TheoremViolation as exc:
        report.add("status", "THEOREM_VIOLATION")
        report.add("message", str(exc))
        if exc.obstruction is not None:
            report.add("obstruction", exc.obstruction)
        if exc.coloring is not None and getattr(args, "witness_out", None):
            write_coloring(args.witness_out, exc.coloring)
            report.add("witness_file", args.witness_out)
        report.emit()
        return EXIT_VIOLATION
    except RHLError as exc:
        print(f"rhl: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report.emit()
    return code


if __name__ == "__main__":
    sys.exit(main())
