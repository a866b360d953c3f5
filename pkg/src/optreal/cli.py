"""Command-line front end.

Subcommands:
    check <seq>                         graphicality test
    mds value <seq>                     minimum dominating-set size over realizations
    mds realize <seq> [--json]         witness graph + dominating-set certificate
    mm value <seq>                      maximum matching size over realizations
    mm realize <seq> [--json]          witness graph + matching certificate
    verify --seq <seq> --edges <path> [--dominating <csv>] [--matching <pairs>]
    oracle <seq> --objective mds|mm [--limit N]   exhaustive ground truth

``<seq>`` is inline text ("4 3 2 2 1"), ``@file`` to read a file, or ``-``
for standard input.  Outputs are deterministic for fixed inputs, except the
``timing_ms`` field of JSON reports.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .dominating import mds_value, realize_mds, verify_dominating
from .errors import DomainError, OptrealError
from .matching import mm_value, realize_mm, verify_matching
from .oracle import DEFAULT_LIMIT, oracle_mds, oracle_mm
from .sequences import (DegreeSequence, DominatingSet, Matching, Realization,
                        is_graphic, parse_sequence)

__all__ = ["main"]


def _load_sequence(source: str) -> DegreeSequence:
    if source == "-":
        text = sys.stdin.read()
    elif source.startswith("@"):
        with open(source[1:], "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = source
    return parse_sequence(text)


def _full_degrees(d: DegreeSequence) -> list[int]:
    return list(d.values) + [0] * d.zero_count


def _report(d: DegreeSequence, objective: str, value=None, graph: Realization | None = None,
            started: float | None = None) -> dict:
    report = {
        "n": d.total_vertices,
        "degrees": _full_degrees(d),
        "graphic": is_graphic(d),
        "objective": objective,
        "value": value,
        "edges": None,
        "certificate": None,
        "timing_ms": round((time.perf_counter() - started) * 1000.0, 3) if started else 0.0,
    }
    if graph is not None:
        report["edges"] = [[u, v] for u, v in sorted(graph.edges)]
        cert = graph.certificate
        if isinstance(cert, DominatingSet):
            report["certificate"] = {"type": "dominating-set", "members": list(cert.vertices)}
        elif isinstance(cert, Matching):
            report["certificate"] = {"type": "matching", "members": [[a, b] for a, b in cert.pairs]}
    return report


def _print_edges(graph: Realization, out):
    for u, v in sorted(graph.edges):
        print(f"{u} {v}", file=out)


def _cmd_check(args, out) -> int:
    d = _load_sequence(args.sequence)
    if is_graphic(d):
        print("graphic", file=out)
        return 0
    print("not graphic", file=out)
    return 1


def _cmd_value(args, out, objective: str) -> int:
    d = _load_sequence(args.sequence)
    value = mds_value(d) if objective == "mds" else mm_value(d)
    print(value, file=out)
    return 0


def _cmd_realize(args, out, objective: str) -> int:
    started = time.perf_counter()
    d = _load_sequence(args.sequence)
    if objective == "mds":
        graph = realize_mds(d)
        value = len(graph.certificate.vertices)
    else:
        graph = realize_mm(d)
        value = len(graph.certificate.pairs)
    if args.json:
        print(json.dumps(_report(d, objective, value, graph, started)), file=out)
        return 0
    _print_edges(graph, out)
    if objective == "mds":
        members = " ".join(str(v) for v in graph.certificate.vertices)
        label = "dominating-set"
    else:
        members = " ".join(f"({a},{b})" for a, b in graph.certificate.pairs)
        label = "matching"
    print(f"{label}: {members}" if members else f"{label}:", file=out)
    return 0


def _parse_edge_file(path: str, n: int) -> list[tuple[int, int]]:
    edges = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise DomainError(f"{path}:{lineno}: expected two vertex ids, got {line!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise DomainError(f"{path}:{lineno}: non-integer vertex id") from None
            if not (1 <= u <= n and 1 <= v <= n) or u == v:
                raise DomainError(f"{path}:{lineno}: edge ({u}, {v}) invalid for n={n}")
            edges.append((u, v))
    return edges


def _parse_vertex_csv(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise DomainError(f"bad vertex list {text!r}; expected comma-separated integers") from None


def _parse_pair_csv(text: str) -> list[tuple[int, int]]:
    pairs = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        halves = tok.split("-")
        if len(halves) != 2:
            raise DomainError(f"bad matching pair {tok!r}; expected a-b")
        try:
            pairs.append((int(halves[0]), int(halves[1])))
        except ValueError:
            raise DomainError(f"bad matching pair {tok!r}; expected integers") from None
    return pairs


def _cmd_verify(args, out) -> int:
    d = _load_sequence(args.seq)
    n = d.total_vertices
    edges = _parse_edge_file(args.edges, n)
    graph = Realization.from_edges(n, edges)
    ok = True

    degrees_ok = graph.realizes(d)
    print(f"degrees: {'ok' if degrees_ok else 'FAIL'}", file=out)
    ok &= degrees_ok

    if args.dominating is not None:
        vertices = _parse_vertex_csv(args.dominating)
        dom_ok = verify_dominating(graph, vertices)
        print(f"dominating: {'ok' if dom_ok else 'FAIL'}", file=out)
        ok &= dom_ok
    if args.matching is not None:
        pairs = _parse_pair_csv(args.matching)
        match_ok = verify_matching(graph, pairs)
        print(f"matching: {'ok' if match_ok else 'FAIL'}", file=out)
        ok &= match_ok
    return 0 if ok else 1


def _cmd_oracle(args, out) -> int:
    d = _load_sequence(args.sequence)
    value = oracle_mds(d, args.limit) if args.objective == "mds" else oracle_mm(d, args.limit)
    print(value, file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="optreal",
        description="Degree-sequence realizations optimizing dominating set or matching.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide graphicality")
    p.add_argument("sequence", help="degrees inline, @file, or - for stdin")

    for name in ("mds", "mm"):
        group = sub.add_parser(name, help=f"{name} objective")
        gsub = group.add_subparsers(dest="action", required=True)
        pv = gsub.add_parser("value", help="optimal size over all realizations")
        pv.add_argument("sequence")
        pr = gsub.add_parser("realize", help="witness graph with certificate")
        pr.add_argument("sequence")
        pr.add_argument("--json", action="store_true", help="emit a JSON report")

    p = sub.add_parser("verify", help="check an edge list and certificates against a sequence")
    p.add_argument("--seq", required=True, help="degrees inline, @file, or -")
    p.add_argument("--edges", required=True, help="edge list file, one 'u v' per line, # comments")
    p.add_argument("--dominating", help="comma-separated vertex list")
    p.add_argument("--matching", help="comma-separated pairs like 1-4,2-3")

    p = sub.add_parser("oracle", help="exhaustive optimum for small instances")
    p.add_argument("sequence")
    p.add_argument("--objective", choices=("mds", "mm"), required=True)
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT,
                   help=f"enumeration vertex limit (default {DEFAULT_LIMIT})")

    return parser


def run(argv=None, out=None, err=None) -> int:
    """Dispatch a parsed command line; returns the process exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "check":
            return _cmd_check(args, out)
        if args.command in ("mds", "mm"):
            if args.action == "value":
                return _cmd_value(args, out, args.command)
            return _cmd_realize(args, out, args.command)
        if args.command == "verify":
            return _cmd_verify(args, out)
        if args.command == "oracle":
            return _cmd_oracle(args, out)
        raise AssertionError(f"unhandled command {args.command!r}")
    except OptrealError as exc:
        print(f"error: {exc}", file=err)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return 1


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
