"""Command-line interface.

Subcommands: analyze, decompose, predict, construct, verify, search. Graph
arguments accept a small spec language (path:n, star:n, cycle:n,
matching:n, clique:n, dbroom:l,s,t, file:PATH) or a bare path to a graph6
or edge-list file. All reports are JSON with a schema version; pass
--deterministic to strip the timestamp and timing fields so identical
invocations produce byte-identical output.

Exit codes: 0 success, 64 argument/spec parse failure, 65 outside the
implemented theorem cases, 70 other domain errors. ``verify`` uses 0 for
pattern-free, 1 for containment, 2 for an exhausted search budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from datetime import datetime, timezone
from pathlib import Path

from .blowup import edge_blowup
from .canon import canonical_form
from .constructions import build_candidates_from, build_h, build_h_prime
from .decomposition import decomposition_family, forbidden_family
from .errors import (
    AmbiguousCaseError,
    BudgetExceededError,
    OutOfTheoremScopeError,
    ParseError,
    TuranLabError,
)
from .formulas import classify, prediction_report
from .graphio import (
    decode_edge_list,
    encode_edge_list,
    encode_graph6,
    read_graph6_lines,
    to_dot,
)
from .graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    double_broom,
    matching_graph,
    path_graph,
    star_graph,
)
from .search import DEFAULT_NODE_BUDGET, brute_ex, subgraph_contains
from .trees import analyze_tree, degree_stratum

SCHEMA = 1

EXIT_OK = 0
EXIT_CONTAINS = 1
EXIT_BUDGET = 2
EXIT_USAGE = 64
EXIT_SCOPE = 65
EXIT_SOFTWARE = 70


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _spec_int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {text!r}") from None


def parse_graph_spec(spec: str) -> list[Graph]:
    """Parse one graph argument; file specs may hold several graphs."""
    kind, sep, arg = spec.partition(":")
    if sep and kind in {"path", "star", "cycle", "matching", "clique"}:
        n = _spec_int(arg, f"{kind} size")
        try:
            if kind == "path":
                return [path_graph(n)]
            if kind == "star":
                return [star_graph(n)]
            if kind == "cycle":
                return [cycle_graph(n)]
            if kind == "matching":
                return [matching_graph(n)]
            return [complete_graph(n)]
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    if sep and kind == "dbroom":
        pieces = arg.split(",")
        if len(pieces) != 3:
            raise ParseError("dbroom spec needs three integers: dbroom:l,s,t")
        length, s, t = (_spec_int(x, "dbroom parameter") for x in pieces)
        try:
            return [double_broom(length, s, t)]
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    if sep and kind == "file":
        return _read_graph_file(arg)
    if os.path.exists(spec):
        return _read_graph_file(spec)
    raise ParseError(
        f"unrecognized graph spec {spec!r}; expected path:n, star:n, cycle:n, "
        "matching:n, clique:n, dbroom:l,s,t, file:PATH, or an existing file"
    )


def _read_graph_file(path: str) -> list[Graph]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    fields = first.split()
    if len(fields) == 2 and all(f.lstrip("-").isdigit() for f in fields):
        return [decode_edge_list(text)]
    graphs = read_graph6_lines(text)
    if not graphs:
        raise ParseError(f"no graphs found in {path}")
    return graphs


def _single_graph(spec: str) -> Graph:
    graphs = parse_graph_spec(spec)
    if len(graphs) != 1:
        raise ParseError(f"expected exactly one graph, found {len(graphs)} in {spec!r}")
    return graphs[0]


def _tree_argument(spec: str) -> Graph:
    t = _single_graph(spec)
    if not t.is_tree():
        raise ParseError(f"spec {spec!r} is not a tree (connected and acyclic)")
    return t


def _g6(g: Graph) -> str:
    return encode_graph6(g).decode("ascii")


def _emit(report: dict, args) -> None:
    if not args.deterministic:
        report["generated_at"] = datetime.now(timezone.utc).isoformat()
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("TURANLAB_THREADS", "")
    if env.isdigit() and int(env) > 0:
        return int(env)
    return 1


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_analyze(args) -> int:
    t = _tree_argument(args.tree)
    an = analyze_tree(t)
    report = {
        "schema": SCHEMA,
        "command": "analyze",
        "tree": _g6(t),
        "n": t.n,
        "edges": t.edge_count,
        "class_a": sorted(an.bip.class_a),
        "class_b": sorted(an.bip.class_b),
        "delta_a": an.delta_a,
        "alpha": an.alpha,
        "beta": an.beta,
        "nu": an.nu,
        "q": an.q,
        "degenerate": an.degenerate,
    }
    if t.n >= 2:
        stratum = degree_stratum(t)
        report["stratum"] = {
            "delta_a": stratum.delta_a,
            "tight": sorted(stratum.tight),
            "hubs": sorted(stratum.hubs),
            "hub_slack": stratum.hub_slack,
        }
    _emit(report, args)
    return EXIT_OK


def cmd_decompose(args) -> int:
    t = _tree_argument(args.tree)
    family = decomposition_family(t, workers=_threads(args))
    forb = forbidden_family(t, family)
    report = {
        "schema": SCHEMA,
        "command": "decompose",
        "tree": _g6(t),
        "edge_count": family.t_edges,
        "q": family.q_min,
        "member_count": len(family.members),
        "members": [
            {
                "graph6": _g6(m.graph),
                "n": m.graph.n,
                "q": m.q,
                "beta": m.beta,
                "split_set": sorted(m.split_set),
            }
            for m in family.members
        ],
        "forbidden": {
            "mode": forb.mode.value,
            "members": [_g6(g) for g in forb.members],
            "in_theorem_scope": forb.in_theorem_scope,
        },
    }
    _emit(report, args)
    return EXIT_OK


def cmd_predict(args) -> int:
    t = _tree_argument(args.tree)
    report = prediction_report(t, args.p, args.n, args.nmin_override)
    report = {
        "schema": SCHEMA,
        "command": "predict",
        "tree": _g6(t),
        "p": args.p,
        "n": args.n,
        **report,
    }
    _emit(report, args)
    return EXIT_OK


def cmd_construct(args) -> int:
    t = _tree_argument(args.tree)
    pred = classify(t, args.p)
    candidates = build_candidates_from(pred, args.n)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    blowup = edge_blowup(t, args.p)
    written = []

    def write_graph(stem: str, g: Graph):
        (out / f"{stem}.g6").write_bytes(encode_graph6(g) + b"\n")
        (out / f"{stem}.dot").write_text(to_dot(g, name=stem))
        written.append(f"{stem}.g6")
        written.append(f"{stem}.dot")

    write_graph("blowup", blowup.graph)
    write_graph("hprime", build_h_prime(args.n, args.p, pred.q).graph)
    write_graph("h", build_h(args.n, args.p, pred.q).graph)
    cand_entries = []
    for i, cand in enumerate(candidates):
        stem = f"candidate_{i:03d}"
        write_graph(stem, cand.graph)
        cand_entries.append({
            "file": f"{stem}.g6",
            "edges": cand.graph.edge_count,
            "embedded": _g6(cand.embedded),
            "apex_set": list(cand.apex_set),
        })
    manifest = {
        "schema": SCHEMA,
        "command": "construct",
        "tree": _g6(t),
        "p": args.p,
        "n": args.n,
        "q": pred.q,
        "case": pred.case.value,
        "forbidden_family": [_g6(g) for g in pred.forbidden.members],
        "predicted_value": pred.value_at(args.n),
        "blowup_order": blowup.graph.n,
        "candidates": cand_entries,
        "files": written + ["manifest.json"],
    }
    if not args.deterministic:
        manifest["generated_at"] = datetime.now(timezone.utc).isoformat()
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    json.dump(manifest, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    host = _single_graph(args.host)
    patterns = []
    for spec in args.pattern:
        patterns.extend(parse_graph_spec(spec))
    patterns.sort(key=lambda m: (m.n, m.edge_count, m.adj))
    report = {
        "schema": SCHEMA,
        "command": "verify",
        "host": _g6(host),
        "host_n": host.n,
        "host_edges": host.edge_count,
        "patterns": [_g6(p) for p in patterns],
        "budget": args.budget,
    }
    try:
        witness = None
        for pat in patterns:
            if subgraph_contains(host, pat, budget=args.budget):
                witness = pat
                break
    except BudgetExceededError:
        report["verdict"] = "budget_exceeded"
        _emit(report, args)
        return EXIT_BUDGET
    if witness is None:
        report["verdict"] = "free"
        _emit(report, args)
        return EXIT_OK
    report["verdict"] = "contains"
    report["witness_pattern"] = _g6(witness)
    _emit(report, args)
    return EXIT_CONTAINS


def cmd_search(args) -> int:
    family = []
    for spec in args.family:
        family.extend(parse_graph_spec(spec))
    result = brute_ex(args.n, family, budget=args.budget)
    report = {
        "schema": SCHEMA,
        "command": "search",
        "n": result.n,
        "family": [_g6(g) for g in result.family],
        "ex_value": result.ex_value,
        "witnesses": [_g6(canonical_from_witness(g)) for g in result.witnesses],
        "explored": result.explored,
    }
    if not args.deterministic:
        report["elapsed"] = round(result.elapsed, 6)
    _emit(report, args)
    return EXIT_OK


def canonical_from_witness(g: Graph) -> Graph:
    from .canon import canonical_graph

    return canonical_graph(g)


# ---------------------------------------------------------------------------
# parser and dispatch
# ---------------------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="turanlab",
        description="Turan numbers of edge blow-ups of trees: predictions, "
                    "constructions, and exhaustive verification.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(sp):
        sp.add_argument("--deterministic", action="store_true",
                        help="suppress timestamp and timing fields")

    sp = sub.add_parser("analyze", help="tree invariants and color classes")
    sp.add_argument("--tree", required=True, help="tree spec, e.g. dbroom:2,2,2")
    common(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("decompose", help="decomposition family and forbidden family")
    sp.add_argument("--tree", required=True)
    sp.add_argument("--threads", type=int, default=None,
                    help="worker processes for the subset enumeration "
                         "(default: TURANLAB_THREADS or 1)")
    common(sp)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("predict", help="predicted extremal value at a given n")
    sp.add_argument("--tree", required=True)
    sp.add_argument("-p", type=int, required=True, help="clique parameter, p >= 3")
    sp.add_argument("-n", type=_positive_int, required=True)
    sp.add_argument("--nmin-override", type=_positive_int, default=None,
                    help="replace the default asymptotic threshold")
    common(sp)
    sp.set_defaults(func=cmd_predict)

    sp = sub.add_parser("construct", help="emit candidate extremal graphs and the blow-up")
    sp.add_argument("--tree", required=True)
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-n", type=_positive_int, required=True)
    sp.add_argument("--out", required=True, help="output directory")
    common(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="check a host graph against pattern graphs")
    sp.add_argument("--host", required=True)
    sp.add_argument("--pattern", required=True, action="append",
                    help="pattern spec or file; repeatable")
    sp.add_argument("--budget", type=_positive_int, default=DEFAULT_NODE_BUDGET)
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("search", help="exact ex(n, family) by exhaustive search")
    sp.add_argument("-n", type=_positive_int, required=True)
    sp.add_argument("--family", required=True, action="append",
                    help="family member spec or file; repeatable")
    sp.add_argument("--budget", type=_positive_int, default=DEFAULT_NODE_BUDGET)
    common(sp)
    sp.set_defaults(func=cmd_search)

    return parser


def _error_json(kind: str, message: str, reason: str | None = None) -> None:
    payload = {"schema": SCHEMA, "error": kind, "message": message}
    if reason is not None:
        payload["reason"] = reason
    json.dump(payload, sys.stderr, indent=2)
    sys.stderr.write("\n")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"turanlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except ParseError as exc:
        _error_json("parse_error", str(exc))
        return EXIT_USAGE
    except OutOfTheoremScopeError as exc:
        _error_json("out_of_theorem_scope", str(exc), reason=exc.reason)
        return EXIT_SCOPE
    except AmbiguousCaseError as exc:
        _error_json("ambiguous_case", str(exc), reason="ambiguous_rows")
        return EXIT_SCOPE
    except BudgetExceededError as exc:
        _error_json("budget_exceeded", str(exc))
        return EXIT_BUDGET
    except TuranLabError as exc:
        _error_json(type(exc).__name__, str(exc))
        return EXIT_SOFTWARE


if __name__ == "__main__":
    sys.exit(main())
