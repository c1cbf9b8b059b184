"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import os
import sys
from typing import IO, Iterator, Sequence

from . import generators
from .formats import InputError, format_edge_list, read_graphs, to_graph6
from .graph import Graph, GraphError
from .indices import IndexOverflowError, index_set
from .transforms import TransformKind, predicted_degrees, transform
from .verify import CorpusSpec, verify_corpus, write_csv

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

INDEX_FIELDS = ("n", "m", "M1", "M2", "F", "xi4", "rezg3")


class UsageError(Exception):
    pass


@contextlib.contextmanager
def _open_input(path: str | None) -> Iterator[IO[str]]:
    if path is None or path == "-":
        yield sys.stdin
        return
    try:
        f = open(path, encoding="ascii")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    with f:
        yield f


@contextlib.contextmanager
def _open_output(path: str | None) -> Iterator[IO[str]]:
    if path is None or path == "-":
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as f:
        yield f


def _iter_input(path: str | None) -> Iterator[Graph]:
    with _open_input(path) as stream:
        for _, g in read_graphs(stream):
            yield g


def cmd_indices(args: argparse.Namespace, out: IO[str]) -> int:
    writer = None
    for g in _iter_input(args.input):
        values = index_set(g).to_dict()
        if args.format == "json":
            out.write(json.dumps(values, separators=(",", ":")) + "\n")
        elif args.format == "csv":
            if writer is None:
                writer = csv.writer(out, lineterminator="\n")
                writer.writerow(("graph6",) + INDEX_FIELDS)
            writer.writerow([to_graph6(g)] + [values[k] for k in INDEX_FIELDS])
        else:
            out.write(to_graph6(g) + " " + " ".join(f"{k}={values[k]}" for k in INDEX_FIELDS) + "\n")
    return EXIT_OK


def _prediction_rows(g: Graph, kind: TransformKind) -> list[tuple[int, str, int]]:
    pred = predicted_degrees(g, kind)
    rows = [(u, f"v{u}", d) for u, d in sorted(pred.vertex_rule.items())]
    rows += [(g.n + j, f"e{u}-{v}", pred.edge_rule[(u, v)]) for j, (u, v) in enumerate(g.edges)]
    return rows


def cmd_transform(args: argparse.Namespace, out: IO[str]) -> int:
    try:
        kind = TransformKind.parse(args.kind)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for g in _iter_input(args.input):
        t = transform(g, kind)
        rows = _prediction_rows(g, kind) if args.predict else None
        if args.format == "json":
            record: dict = {"source": to_graph6(g), "kind": kind.value, "graph6": to_graph6(t),
                            "n": t.n, "m": t.m}
            if rows is not None:
                record["predicted_degrees"] = [
                    {"label": label, "origin": origin, "degree": d} for label, origin, d in rows
                ]
            out.write(json.dumps(record, separators=(",", ":")) + "\n")
            continue
        if args.format == "graph6":
            out.write(to_graph6(t) + "\n")
        else:
            out.write(format_edge_list(t))
        if rows is not None:
            out.write("# label origin predicted_degree\n")
            for label, origin, d in rows:
                out.write(f"# {label} {origin} {d}\n")
    return EXIT_OK


def _threads(requested: int | None) -> int:
    env = os.environ.get("XFORM_THREADS")
    cap = None
    if env:
        try:
            cap = max(1, int(env))
        except ValueError:
            raise UsageError(f"XFORM_THREADS must be an integer, got {env!r}") from None
    threads = requested if requested is not None else (cap or 1)
    if threads < 1:
        raise UsageError("--threads must be >= 1")
    return min(threads, cap) if cap else threads


def _corpus_spec(args: argparse.Namespace) -> CorpusSpec:
    random_opts = (args.nmin, args.nmax, args.seed)
    if args.random is None and any(v is not None for v in random_opts):
        raise UsageError("--nmin/--nmax/--seed only apply with --random")
    if args.exhaustive is not None:
        spec = CorpusSpec.exhaustive(args.exhaustive, dedupe=args.dedupe)
    elif args.random is not None:
        if any(v is None for v in random_opts):
            raise UsageError("--random needs --nmin, --nmax and --seed")
        spec = CorpusSpec.random(args.random, args.nmin, args.nmax, args.seed, dedupe=args.dedupe)
    elif args.families is not None:
        try:
            spec = CorpusSpec.from_families(args.families, dedupe=args.dedupe)
            for call in spec.families:
                call.build()
        except (ValueError, GraphError) as exc:
            raise UsageError(str(exc)) from None
    else:
        spec = CorpusSpec.from_graphs(list(_iter_input(args.input)), source=args.input, dedupe=args.dedupe)
    try:
        spec.validate()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return spec


def cmd_verify(args: argparse.Namespace, out: IO[str]) -> int:
    spec = _corpus_spec(args)
    threads = _threads(args.threads)
    report = verify_corpus(spec, threads=threads, keep_reports=args.format == "csv")
    if args.format == "json":
        out.write(report.to_json(timing=args.timing))
    elif args.format == "csv":
        write_csv(out, report.reports or [])
    else:
        out.write(f"graphs: {report.total}\nfailures: {len(report.failures)}\n")
        for r in report.failures:
            bad = [f"{fid} (formula {c.formula_value}, oracle {c.oracle_value}, diff {c.difference})"
                   for fid, c in r.per_formula.items() if not c.match]
            if not r.degree_rule_match:
                bad.append("degree-rules")
            if not r.complement_pairing_match:
                bad.append("complement-pairing")
            bad += [f"{k}: {v}" for k, v in r.errors.items()]
            out.write(f"FAIL {r.graph_id}: " + "; ".join(bad) + "\n")
        if args.timing:
            out.write(f"elapsed_ms: {report.elapsed_ms:.3f}\n")
    print(f"verified {report.total} graphs in {report.elapsed_ms:.0f} ms, "
          f"{len(report.failures)} failing", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_generate(args: argparse.Namespace, out: IO[str]) -> int:
    params = {k: getattr(args, k) for k in ("n", "m", "seed", "a", "b") if getattr(args, k) is not None}
    try:
        g = generators.generate(args.family, **params)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "graph6":
        out.write(to_graph6(g) + "\n")
    elif args.format == "json":
        out.write(json.dumps({"graph6": to_graph6(g), "n": g.n, "m": g.m,
                              "edges": [list(e) for e in g.edges]}, separators=(",", ":")) + "\n")
    else:
        out.write(format_edge_list(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xform",
        description="Degree-based indices, total transformation graphs and F-index verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p: argparse.ArgumentParser, formats: Sequence[str], default: str) -> None:
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--out", metavar="FILE", help="write output here instead of stdout")

    p = sub.add_parser("indices", help="print n, m, M1, M2, F, xi4, rezg3 for each input graph")
    p.add_argument("input", nargs="?", help="graph6 lines or one edge-list file (default: stdin)")
    add_io(p, ("json", "csv", "text"), "json")
    p.set_defaults(func=cmd_indices)

    p = sub.add_parser("transform", help="build a transform of each input graph")
    p.add_argument("input", nargs="?", help="graph6 lines or one edge-list file (default: stdin)")
    p.add_argument("--kind", required=True, help="t1, t2 or a sign triple such as '+-+'")
    p.add_argument("--predict", action="store_true", help="also emit the predicted degree table")
    add_io(p, ("graph6", "edgelist", "json", "text"), "graph6")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("verify", help="check every closed form against constructed transforms")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--exhaustive", type=int, metavar="N", help="all labeled graphs with 1..N vertices")
    src.add_argument("--random", type=int, metavar="COUNT", help="COUNT seeded G(n, m) graphs")
    src.add_argument("--families", metavar="LIST", help="e.g. 'cycle:3..12,star:3..12,path:2..12'")
    src.add_argument("--input", metavar="FILE", help="graph6 lines or one edge-list file ('-' for stdin)")
    p.add_argument("--nmin", type=int)
    p.add_argument("--nmax", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--dedupe", action="store_true", help="skip graphs with identical graph6")
    p.add_argument("--threads", type=int, help="worker processes (capped by XFORM_THREADS)")
    p.add_argument("--timing", action="store_true", help="include wall time (output no longer reproducible)")
    add_io(p, ("json", "csv", "text"), "json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="emit a graph from a named family")
    p.add_argument("family", choices=generators.FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    add_io(p, ("graph6", "edgelist", "json"), "graph6")
    p.set_defaults(func=cmd_generate)
    return parser


def _glue_kind(argv: Sequence[str]) -> list[str]:
    """Turn ``--kind -++`` into ``--kind=-++`` so argparse does not read the value as a flag."""
    out: list[str] = []
    it = iter(argv)
    for arg in it:
        if arg == "--kind":
            value = next(it, None)
            out.append(arg if value is None else f"--kind={value}")
        else:
            out.append(arg)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_kind(sys.argv[1:] if argv is None else argv))
    try:
        with _open_output(args.out) as out:
            return args.func(args, out)
    except (UsageError, InputError, IndexOverflowError) as exc:
        print(f"xform {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
