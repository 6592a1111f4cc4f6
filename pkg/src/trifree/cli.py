"""Single command-line entry point.

Subcommands: stats (per-graph invariants), verify-bounds (exhaustive
bound checking over enumerated 3K1-free graphs), verify-ramsey
(endpoint counts against the R(3,k) table), lemma (partition replay and
claim checks), table1 (the tabulated bound row per clique size), and
search (annealing for Ramsey witnesses).

Every command emits one report object: {command, params, rows[],
violations[], stats{}} as text, JSON, or CSV.  Exit codes: 0 success,
1 mathematical inconsistency found, 2 usage or parse error, 3 search
exhausted.  With identical flags and seeds the JSON output is
byte-identical when --deterministic suppresses the timestamp.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .bounds import evaluate_graph, known_ramsey, lemma1_bound, lemma2_bound, table1_bound
from .enumeration import (ENUM_MAX_N, EnumStats, canonical_form, enumerate_ramsey,
                          enumerate_triangle_free_upto)
from .errors import TrifreeError
from .formats import emit_graph6, parse_edge_list, parse_graph6, read_graph_stream
from .graphs import Graph, complement, is_3k1_free, max_degree_vertex
from .invariants import chromatic_number, clique_number, independence_number
from .partition import analyze_graph
from .search import RamseyWitness, SearchParams, _anneal_restart, anneal_search

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_USAGE = 2
EXIT_EXHAUSTED = 3


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--output", default="-", help="report destination (default stdout)")
    p.add_argument("--deterministic", action="store_true",
                   help="omit the timestamp so identical runs match byte for byte")


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", default="-", help="graph file or - for stdin")
    p.add_argument("--input-format", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--on-parse-error", choices=("abort", "skip"), default="abort")


def _add_jobs_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--jobs", type=_positive_int, default=os.cpu_count() or 1,
                   help="parallel workers; 1 forces the sequential reference path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trifree",
        description="Exact chromatic-bound and Ramsey-witness toolkit for "
                    "3K1-free graphs at desk scale.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="per-graph invariants for a graph stream")
    _add_input_flags(p)
    _add_output_flags(p)
    _add_jobs_flag(p)

    p = sub.add_parser("verify-bounds",
                       help="check every bound over all 3K1-free graphs up to --max-n")
    p.add_argument("--max-n", type=_positive_int, default=8)
    _add_output_flags(p)
    _add_jobs_flag(p)

    p = sub.add_parser("verify-ramsey",
                       help="count Ramsey witnesses at (n, k) and compare with the table")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    _add_output_flags(p)

    p = sub.add_parser("lemma",
                       help="partition replay and claim checks on input graphs")
    _add_input_flags(p)
    _add_output_flags(p)
    _add_jobs_flag(p)

    p = sub.add_parser("table1", help="print the tabulated bound per clique size")
    _add_output_flags(p)

    p = sub.add_parser("search", help="annealing search for a Ramsey(3,k) witness")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iterations", type=_positive_int, default=60_000)
    p.add_argument("--restarts", type=_positive_int, default=8)
    p.add_argument("--temperature", type=float, default=1.2)
    p.add_argument("--cooling", type=float, default=0.95)
    p.add_argument("--witness-out", default="witness",
                   help="base path for <base>.g6 and <base>.json on success")
    _add_output_flags(p)
    _add_jobs_flag(p)
    return parser


# ---------------------------------------------------------------------------
# report plumbing

def _report(command: str, params: dict, rows: list, violations: list,
            stats: dict, deterministic: bool) -> dict:
    stats = dict(stats)
    if not deterministic:
        stats["timestamp"] = time.strftime("%Y-%m-%dT%H:%M:%S")
    return {"command": command, "params": params, "rows": rows,
            "violations": violations, "stats": stats}


def _flatten(value):
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(value, separators=(",", ":"))
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def _write_report(report: dict, fmt: str, output: str) -> None:
    out = sys.stdout if output == "-" else open(output, "w", encoding="ascii")
    try:
        if fmt == "json":
            json.dump(report, out, indent=2, sort_keys=True)
            out.write("\n")
        elif fmt == "csv":
            rows = report["rows"]
            keys: list[str] = []
            for row in rows:
                for key in row:
                    if key not in keys:
                        keys.append(key)
            writer = csv.DictWriter(out, fieldnames=keys)
            writer.writeheader()
            for row in rows:
                writer.writerow({k: _flatten(v) for k, v in row.items()})
        else:
            rows = report["rows"]
            if rows:
                keys = []
                for row in rows:
                    for key in row:
                        if key not in keys:
                            keys.append(key)
                cells = [[_flatten(row.get(k, "")) for k in keys] for row in rows]
                widths = [max(len(k), *(len(c[i]) for c in cells))
                          for i, k in enumerate(keys)]
                out.write("  ".join(k.ljust(w) for k, w in zip(keys, widths)).rstrip() + "\n")
                for c in cells:
                    out.write("  ".join(v.ljust(w) for v, w in zip(c, widths)).rstrip() + "\n")
            for violation in report["violations"]:
                out.write(f"VIOLATION  {_flatten(violation)}\n")
            for key, value in report["stats"].items():
                out.write(f"# {key} = {_flatten(value)}\n")
    finally:
        if out is not sys.stdout:
            out.close()


def _read_input_graphs(args) -> tuple[list[tuple[str, Graph]], int]:
    """Returns ((source, graph) pairs, parse-error count), honoring
    --on-parse-error."""
    if args.input == "-":
        data = sys.stdin.buffer.read()
        name = "<stdin>"
    else:
        with open(args.input, "rb") as fh:
            data = fh.read()
        name = args.input
    if args.input_format == "edgelist":
        return [(name, parse_edge_list(data.decode("ascii")))], 0
    errors: list[tuple[int, str]] = []
    records = list(read_graph_stream(data.splitlines(), source=name,
                                     on_error=args.on_parse_error,
                                     error_log=errors))
    for lineno, message in errors:
        print(f"warning: {name}:{lineno}: {message}", file=sys.stderr)
    return [(rec.source, rec.graph) for rec in records], len(errors)


# ---------------------------------------------------------------------------
# parallel map helpers (workers must be top-level for pickling)

def _pmap(fn, items, jobs):
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (jobs * 4))))


def _stats_worker(item: tuple[str, bytes]) -> dict:
    source, g6 = item
    g = parse_graph6(g6)
    chi, _ = chromatic_number(g)
    return {
        "source": source, "graph6": g6.decode("ascii"), "n": g.n, "m": g.m,
        "omega": clique_number(g), "alpha": independence_number(g),
        "chi": chi, "delta": max_degree_vertex(g)[1],
        "three_k1_free": is_3k1_free(g),
    }


def _bounds_worker(g6: bytes) -> dict:
    g = parse_graph6(g6)  # the 3K1-free graph (complement of triangle-free)
    rep = evaluate_graph(g)
    return {
        "graph6": g6.decode("ascii"), "n": rep.n, "omega": rep.omega,
        "chi": rep.chi,
        "entries": [(e.name, e.value, e.applicable, e.proven, e.slack)
                    for e in rep.entries],
        "violations": [(e.name, e.value) for e in rep.violations()],
    }


def _lemma_worker(item: tuple[str, bytes]) -> dict:
    source, g6 = item
    g = parse_graph6(g6)
    row: dict = {"source": source, "graph6": g6.decode("ascii"), "n": g.n}
    if not is_3k1_free(g):
        row["status"] = "skipped: not 3K1-free"
        return row
    report = analyze_graph(g)
    if report is None:
        row["status"] = "no optimal coloring isolates a max-degree vertex"
        return row
    lp = report.partition
    row.update(status="ok", u=lp.u, chi=lp.coloring.c, r=lp.r, s=lp.s,
               t=lp.t, k=lp.k, p=lp.p, delta=lp.delta, rerouted=lp.rerouted)
    row["identities"] = [
        {"name": c.name, "holds": c.holds, "lhs": c.lhs, "rhs": c.rhs,
         "definitional": c.definitional} for c in report.identities]
    row["claims"] = [
        {"name": c.name, "status": c.status,
         "witness": list(c.witness) if c.witness else None}
        for c in report.claims.claims]
    return row


# ---------------------------------------------------------------------------
# commands

def cmd_stats(args) -> int:
    try:
        pairs, parse_errors = _read_input_graphs(args)
    except TrifreeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    items = [(source, emit_graph6(g)) for source, g in pairs]
    rows = _pmap(_stats_worker, items, args.jobs)
    report = _report("stats", {"input": args.input, "format": args.input_format},
                     rows, [], {"graphs": len(rows), "parse_errors": parse_errors},
                     args.deterministic)
    _write_report(report, args.format, args.output)
    return EXIT_OK


def cmd_verify_bounds(args) -> int:
    if args.max_n > ENUM_MAX_N:
        print(f"error: --max-n capped at {ENUM_MAX_N}", file=sys.stderr)
        return EXIT_USAGE
    t0 = time.perf_counter()
    complements = [emit_graph6(complement(g))
                   for _n, g in enumerate_triangle_free_upto(args.max_n)]
    enum_seconds = time.perf_counter() - t0
    results = _pmap(_bounds_worker, complements, args.jobs)

    per_omega: dict[int, dict] = {}
    violation_rows = []
    bound_names = ("lemma1", "lemma2", "table1", "reed", "conjecture2")
    violation_counts = {name: 0 for name in bound_names}
    for res in results:
        agg = per_omega.setdefault(res["omega"], {"omega": res["omega"], "graphs": 0})
        agg["graphs"] += 1
        for name, value, applicable, _proven, slack in res["entries"]:
            if not applicable:
                continue
            key = f"min_slack_{name}"
            if key not in agg or slack < agg[key]:
                agg[key] = slack
        for name, value in res["violations"]:
            violation_counts[name] += 1
            violation_rows.append({"graph6": res["graph6"], "n": res["n"],
                                   "omega": res["omega"], "chi": res["chi"],
                                   "bound": name, "value": value})
    rows = [per_omega[w] for w in sorted(per_omega)]
    stats = {"max_n": args.max_n, "graphs": len(results),
             "enumeration_seconds": round(enum_seconds, 3)}
    stats.update({f"violations_{k}": v for k, v in violation_counts.items()})
    report = _report("verify-bounds", {"max_n": args.max_n, "jobs": args.jobs},
                     rows, violation_rows, stats, args.deterministic)
    _write_report(report, args.format, args.output)
    return EXIT_INCONSISTENT if violation_rows else EXIT_OK


def cmd_verify_ramsey(args) -> int:
    if args.n > ENUM_MAX_N:
        print(f"error: --n capped at {ENUM_MAX_N}", file=sys.stderr)
        return EXIT_USAGE
    stats = EnumStats(n=args.n, predicate="")
    count = sum(1 for _ in enumerate_ramsey(args.n, args.k, stats))
    knowledge = known_ramsey(args.k)
    violations = []
    if knowledge.exact is not None:
        expected_empty = args.n >= knowledge.exact
        if (count == 0) != expected_empty:
            violations.append({"n": args.n, "k": args.k, "count": count,
                               "known": knowledge.exact,
                               "reason": "count contradicts the exact value"})
    else:
        if count == 0 and args.n < knowledge.lower:
            violations.append({"n": args.n, "k": args.k, "count": count,
                               "known_lower": knowledge.lower,
                               "reason": "empty below the known lower bound"})
        if count > 0 and args.n >= knowledge.upper:
            violations.append({"n": args.n, "k": args.k, "count": count,
                               "known_upper": knowledge.upper,
                               "reason": "witness at or above the known upper bound"})
    rows = [{"n": args.n, "k": args.k, "count": count,
             "known_lower": knowledge.lower, "known_upper": knowledge.upper,
             "consistent": not violations}]
    report = _report("verify-ramsey", {"n": args.n, "k": args.k}, rows,
                     violations, {"enumerated_classes": stats.count,
                                  "seconds": round(stats.seconds, 3)},
                     args.deterministic)
    _write_report(report, args.format, args.output)
    return EXIT_INCONSISTENT if violations else EXIT_OK


def cmd_lemma(args) -> int:
    try:
        pairs, parse_errors = _read_input_graphs(args)
    except TrifreeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    items = [(source, emit_graph6(g)) for source, g in pairs]
    rows = _pmap(_lemma_worker, items, args.jobs)
    violations = []
    for row in rows:
        for ident in row.get("identities", []):
            if ident["definitional"] and not ident["holds"]:
                violations.append({"source": row["source"], "graph6": row["graph6"],
                                   "identity": ident["name"],
                                   "lhs": ident["lhs"], "rhs": ident["rhs"]})
    stats = {"graphs": len(rows), "parse_errors": parse_errors,
             "skipped": sum(1 for r in rows if r.get("status") != "ok")}
    report = _report("lemma", {"input": args.input}, rows, violations, stats,
                     args.deterministic)
    _write_report(report, args.format, args.output)
    return EXIT_INCONSISTENT if violations else EXIT_OK


def cmd_table1(args) -> int:
    rows = []
    for omega in range(2, 12):
        formula = lemma1_bound(omega) if omega % 2 else lemma2_bound(omega)
        bound = table1_bound(omega)
        rows.append({"omega_plus_1": omega + 1, "omega": omega, "bound": bound,
                     "formula": formula, "strengthened": bound < formula})
    report = _report("table1", {}, rows, [], {}, args.deterministic)
    _write_report(report, args.format, args.output)
    return EXIT_OK


def cmd_search(args) -> int:
    try:
        params = SearchParams(n=args.n, k=args.k, seed=args.seed,
                              max_iterations=args.max_iterations,
                              initial_temperature=args.temperature,
                              cooling=args.cooling, restarts=args.restarts)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.jobs > 1:
        # All restarts run; the lowest successful restart index wins, which
        # reproduces the sequential first-success rule.
        results = _pmap(_search_restart_worker,
                        [(params, r) for r in range(params.restarts)], args.jobs)
        witness = None
        total = sum(used for _rows, used in results)
        for rows_found, _used in results:
            if rows_found is not None:
                g = Graph(params.n, tuple(rows_found),
                          sum(r.bit_count() for r in rows_found) // 2)
                witness = RamseyWitness(
                    graph=g, k=params.k,
                    canonical=canonical_form(g) if g.n <= 16 else b"",
                    provenance="searched", seed=params.seed, iterations=total)
                break
    else:
        witness = anneal_search(params)

    found = witness is not None
    row = {"n": args.n, "k": args.k, "seed": args.seed, "found": found}
    files = {}
    if found:
        g6 = emit_graph6(witness.graph).decode("ascii")
        row["witness_graph6"] = g6
        row["iterations"] = witness.iterations
        base = args.witness_out
        with open(base + ".g6", "w", encoding="ascii") as fh:
            fh.write(witness.canonical.decode("ascii") if witness.canonical
                     else g6)
            fh.write("\n")
        with open(base + ".json", "w", encoding="ascii") as fh:
            json.dump({"k": witness.k, "seed": witness.seed,
                       "provenance": witness.provenance,
                       "iterations": witness.iterations,
                       "graph6": g6,
                       "canonical": witness.canonical.decode("ascii")}, fh,
                      indent=2, sort_keys=True)
            fh.write("\n")
        files = {"witness_g6": base + ".g6", "witness_json": base + ".json"}
    report = _report("search",
                     {"n": args.n, "k": args.k, "seed": args.seed,
                      "max_iterations": args.max_iterations,
                      "restarts": args.restarts}, [row], [],
                     {"found": found, **files}, args.deterministic)
    _write_report(report, args.format, args.output)
    return EXIT_OK if found else EXIT_EXHAUSTED


def _search_restart_worker(item):
    params, restart = item
    return _anneal_restart(params, restart)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "stats": cmd_stats,
        "verify-bounds": cmd_verify_bounds,
        "verify-ramsey": cmd_verify_ramsey,
        "lemma": cmd_lemma,
        "table1": cmd_table1,
        "search": cmd_search,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
