"""The bergex command line.

Subcommands: detect, reduce, engine, audit, construct, exact, exact-graph,
sandwich, bound, verify-all, replay. Every run prints one canonical JSON
document {"schema", "kind", "result", "manifest"} on stdout; with -o the
constructed object goes to the file (text, or JSON with --json) and the
manifest is also written alongside it. Exit codes: 0 success or
contained-as-documented, 1 negative result, 2 usage or input error,
3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .berge import OracleLimitError, contains_berge, oracle_contains_berge
from .bounds import evaluate
from .constructions import (
    FurediParams,
    blowup_bipartite,
    certify,
    cycle_blowup,
    furedi_k2t,
    furedi_stats,
    linear_via_independent_set,
    linear_via_matching,
    triangles_to_hyperedges,
)
from .core import Hypergraph, Multigraph, complete_bipartite, cycle_graph
from .engine import eliminate
from .jsonable import (
    audit_doc,
    bound_doc,
    certificate_doc,
    decomposition_doc,
    engine_doc,
    gp2_report_doc,
    sandwich_doc,
    search_doc,
    witness_doc,
)
from .linear_audit import audit
from .manifest import RunManifest, build_manifest, canonical_json, sha256_text
from .reduction import gp2_certify, gp2_decompose
from .search import Budget, exact_ex_r, exact_graph_ex, sandwich_check
from .serial import InputFormatError, dump, load

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


class CommandError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _load_hypergraph(path) -> Hypergraph:
    obj = load(path)
    if not isinstance(obj, Hypergraph):
        raise CommandError(f"{path} holds a graph; a hypergraph is required")
    return obj


def _load_graph(path) -> Multigraph:
    obj = load(path)
    if not isinstance(obj, Multigraph):
        raise CommandError(f"{path} holds a hypergraph; a graph is required")
    return obj


def _budget(args) -> Budget:
    if not args.budget:
        return Budget()
    parts = args.budget.split(",")
    try:
        nodes = int(parts[0])
        seconds = float(parts[1]) if len(parts) > 1 else Budget().max_seconds
    except ValueError as exc:
        raise CommandError(f"bad --budget {args.budget!r}: {exc}") from exc
    return Budget(max_nodes=nodes, max_seconds=seconds)


# --------------------------------------------------------------------------
# handlers: each returns (exit_code, result_doc, input_paths, output_files)

def _cmd_detect(args):
    h = _load_hypergraph(args.hypergraph)
    f = _load_graph(args.pattern)
    if args.oracle:
        try:
            contained = oracle_contains_berge(h, f)
        except OracleLimitError as exc:
            raise CommandError(str(exc)) from exc
        result = {"contained": contained, "witness": None, "oracle": True}
    else:
        w = contains_berge(h, f)
        result = {"contained": w is not None, "witness": witness_doc(w),
                  "oracle": False}
    code = EXIT_OK if result["contained"] else EXIT_NEGATIVE
    return code, result, [args.hypergraph, args.pattern], {}


def _cmd_reduce(args):
    h = _load_hypergraph(args.hypergraph)
    f = _load_graph(args.pattern)
    order = None
    if args.shuffle is not None:
        order = list(range(len(h.edges)))
        random.Random(args.shuffle).shuffle(order)
    d = gp2_decompose(h, order=order)
    report = gp2_certify(h, f, d)
    result = {"decomposition": decomposition_doc(d),
              "certification": gp2_report_doc(report)}
    code = EXIT_OK if report.all_ok else EXIT_NEGATIVE
    return code, result, [args.hypergraph, args.pattern], {}


def _cmd_engine(args):
    h = _load_hypergraph(args.hypergraph)
    f = _load_graph(args.pattern)
    try:
        report = eliminate(h, f)
    except ValueError as exc:
        raise CommandError(str(exc)) from exc
    result = engine_doc(report, include_trace=args.trace)
    code = EXIT_OK if not report.violations else EXIT_NEGATIVE
    return code, result, [args.hypergraph, args.pattern], {}


def _cmd_audit(args):
    h = _load_hypergraph(args.hypergraph)
    try:
        report = audit(h, args.t)
    except ValueError as exc:
        raise CommandError(str(exc)) from exc
    result = audit_doc(report)
    code = EXIT_OK if report.ok else EXIT_NEGATIVE
    return code, result, [args.hypergraph], {}


def _cmd_construct(args):
    inputs = []
    stats = None
    if args.what == "furedi":
        if args.q is None or args.t is None:
            raise CommandError("furedi needs --q and --t")
        try:
            params = FurediParams.create(args.q, args.t)
        except ValueError as exc:
            raise CommandError(str(exc)) from exc
        obj = furedi_k2t(params)
        stats = furedi_stats(obj, params)
        family = [complete_bipartite(2, args.t)]
        parameters = {"q": args.q, "t": args.t}
        kind = "furedi"
    else:
        if not args.graph:
            raise CommandError(f"{args.what} needs --graph FILE")
        g = _load_graph(args.graph)
        inputs.append(args.graph)
        try:
            if args.what == "triangles":
                obj = triangles_to_hyperedges(g)
                family = [complete_bipartite(2, args.t)] if args.t else []
                parameters = {"t": args.t}
                kind = "triangles"
            elif args.what == "blowup":
                if args.r is None or args.t is None:
                    raise CommandError("blowup needs --r and --t")
                obj = blowup_bipartite(g, args.r, args.t)
                family = [complete_bipartite(2, args.t)]
                parameters = {"r": args.r, "t": args.t}
                kind = "blowup"
            elif args.what == "cycle-blowup":
                if args.r is None or args.k is None:
                    raise CommandError("cycle-blowup needs --r and --k")
                obj = cycle_blowup(g, args.r, args.k)
                family = [cycle_graph(j) for j in range(3, 2 * args.k + 1)]
                parameters = {"r": args.r, "k": args.k}
                kind = "cycle-blowup"
            elif args.what == "linear-is":
                if args.t is None:
                    raise CommandError("linear-is needs --t")
                obj, rep = linear_via_independent_set(g, args.t)
                stats = {"triangle_count": rep.triangle_count,
                         "selected": rep.selected,
                         "conflict_max_degree": rep.conflict_max_degree,
                         "target": rep.target,
                         "below_target": rep.below_target}
                family = [cycle_graph(2), complete_bipartite(2, args.t)]
                parameters = {"t": args.t}
                kind = "linear-is"
            elif args.what == "linear-match":
                if args.t is None:
                    raise CommandError("linear-match needs --t")
                obj, rep = linear_via_matching(g, args.t)
                stats = {"triangle_count": rep.triangle_count,
                         "selected": rep.selected,
                         "covered_fraction": rep.covered_fraction,
                         "coverage_target": rep.coverage_target,
                         "pad_vertices": rep.pad_vertices}
                family = [cycle_graph(2), complete_bipartite(2, args.t)]
                parameters = {"t": args.t}
                kind = "linear-match"
            else:
                raise CommandError(f"unknown construction {args.what!r}")
        except ValueError as exc:
            raise CommandError(str(exc)) from exc

    cert = certify(kind, obj, family, parameters)
    result = certificate_doc(cert, stats)
    outputs = {}
    if args.output:
        dump(obj, args.output, as_json=args.json)
        outputs[args.output] = None
    code = EXIT_OK if cert.freeness_holds in (True, None) else EXIT_NEGATIVE
    return code, result, inputs, outputs


def _cmd_exact(args):
    budget = _budget(args)
    family = []
    paths = args.family.split(",")
    for p in paths:
        family.append(_load_graph(p))
    res = exact_ex_r(args.n, args.r, family, budget)
    code = EXIT_OK if res.status == "exact" else EXIT_BUDGET
    return code, search_doc(res), paths, {}


def _cmd_exact_graph(args):
    budget = _budget(args)
    f = _load_graph(args.pattern)
    res = exact_graph_ex(args.n, args.clique, f, budget)
    code = EXIT_OK if res.status == "exact" else EXIT_BUDGET
    return code, search_doc(res), [args.pattern], {}


def _cmd_sandwich(args):
    budget = _budget(args)
    f = _load_graph(args.pattern)
    try:
        rep = sandwich_check(args.n, args.r, f, budget)
    except ValueError as exc:
        raise CommandError(str(exc)) from exc
    if not rep.conclusive:
        return EXIT_BUDGET, sandwich_doc(rep), [args.pattern], {}
    code = EXIT_OK if rep.ok else EXIT_NEGATIVE
    return code, sandwich_doc(rep), [args.pattern], {}


def _parse_param(token: str):
    if "=" not in token:
        raise CommandError(f"--param expects key=value, got {token!r}")
    key, _, raw = token.partition("=")
    if key == "side":
        return key, raw
    try:
        if "/" in raw:
            return key, Fraction(raw)
        return key, int(raw)
    except ValueError as exc:
        raise CommandError(f"bad value for {key!r}: {raw!r}") from exc


def _cmd_bound(args):
    params = dict(_parse_param(tok) for tok in args.param or [])
    try:
        res = evaluate(args.name, params)
    except ValueError as exc:
        raise CommandError(str(exc)) from exc
    return EXIT_OK, bound_doc(res), [], {}


def _cmd_verify_all(args):
    from .acceptance import run_all
    only = args.only
    if args.suite not in (None, "core"):
        suite_path = Path(args.suite)
        try:
            doc = json.loads(suite_path.read_text())
            only = doc.get("only", only)
        except (OSError, json.JSONDecodeError) as exc:
            raise CommandError(f"cannot read suite {args.suite!r}: {exc}") from exc
    try:
        results = run_all(only)
    except ValueError as exc:
        raise CommandError(str(exc)) from exc
    rows = []
    all_ok = True
    for r in results:
        rows.append({"criterion": r.number, "group": r.group, "passed": r.passed,
                     "within_budget": r.within_budget, "details": r.details})
        all_ok = all_ok and r.ok
        status = "PASS" if r.ok else "FAIL"
        limit = "" if r.time_limit is None else f" (limit {r.time_limit:.0f}s)"
        print(f"[{status}] criterion {r.number:2d} {r.group:22s} "
              f"{r.elapsed:7.2f}s{limit}", file=sys.stderr)
    result = {"criteria": rows, "all_passed": all_ok}
    return (EXIT_OK if all_ok else EXIT_NEGATIVE), result, [], {}


def _cmd_replay(args):
    try:
        doc = json.loads(Path(args.manifest).read_text())
        manifest = RunManifest.from_doc(doc.get("manifest", doc))
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        raise CommandError(f"cannot read manifest: {exc}") from exc
    argv = [manifest.command] + [str(x) for x in manifest.parameters["argv"]]
    code, result_text = _run_for_replay(argv, manifest.seed)
    reproduced = sha256_text(result_text) == manifest.outputs.get("result_sha256")
    result = {"reproduced": reproduced, "result_sha256": sha256_text(result_text)}
    return (EXIT_OK if reproduced else EXIT_NEGATIVE), result, [args.manifest], {}


HANDLERS = {
    "detect": _cmd_detect,
    "reduce": _cmd_reduce,
    "engine": _cmd_engine,
    "audit": _cmd_audit,
    "construct": _cmd_construct,
    "exact": _cmd_exact,
    "exact-graph": _cmd_exact_graph,
    "sandwich": _cmd_sandwich,
    "bound": _cmd_bound,
    "verify-all": _cmd_verify_all,
    "replay": _cmd_replay,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bergex",
        description="Turán-type computations for Berge hypergraphs")
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit constructed objects as JSON instead of text")
    common.add_argument("--seed", type=int, default=0,
                        help="seed recorded in the manifest (default 0)")
    common.add_argument("--threads", type=int, default=1,
                        help="reserved; execution is deterministic and sequential")
    common.add_argument("--budget", default=None,
                        help="search budget NODES[,SECONDS]")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", parents=[common], help="Berge pattern containment")
    p.add_argument("--hypergraph", required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--oracle", action="store_true",
                   help="use the exhaustive oracle (size-capped)")

    p = sub.add_parser("reduce", parents=[common],
                       help="hyperedge-to-pair decomposition plus certification")
    p.add_argument("--hypergraph", required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--shuffle", type=int, default=None,
                   help="shuffle the edge processing order with this seed")

    p = sub.add_parser("engine", parents=[common],
                       help="pair-coloring elimination pipeline")
    p.add_argument("--hypergraph", required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--trace", action="store_true", help="include per-iteration trace")

    p = sub.add_parser("audit", parents=[common],
                       help="neighborhood audit of a linear hypergraph")
    p.add_argument("--hypergraph", required=True)
    p.add_argument("-t", type=int, required=True, dest="t")

    p = sub.add_parser("construct", parents=[common], help="build a witness object")
    p.add_argument("what", choices=["furedi", "triangles", "blowup",
                                    "cycle-blowup", "linear-is", "linear-match"])
    p.add_argument("--q", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--graph")
    p.add_argument("-o", "--output")

    p = sub.add_parser("exact", parents=[common],
                       help="exact Berge Turán number by branch and bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--family", required=True, help="pattern FILE[,FILE...]")

    p = sub.add_parser("exact-graph", parents=[common],
                       help="exact clique-maximization over F-free graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--clique", type=int, required=True)
    p.add_argument("--pattern", required=True)

    p = sub.add_parser("sandwich", parents=[common],
                       help="exact two-sided comparison at one instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--pattern", required=True)

    p = sub.add_parser("bound", parents=[common], help="evaluate a catalog bound")
    p.add_argument("name")
    p.add_argument("--param", action="append", help="key=value (repeatable)")

    p = sub.add_parser("verify-all", parents=[common], help="run the acceptance suite")
    p.add_argument("suite", nargs="?", default=None, help="suite name or JSON file")
    p.add_argument("--only", default=None, help="run a single criterion group")

    p = sub.add_parser("replay", parents=[common],
                       help="re-run a manifest and compare outputs")
    p.add_argument("manifest")

    return parser


def _run_for_replay(argv, seed) -> tuple[int, str]:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = HANDLERS[args.command]
    code, result, _, _ = handler(args)
    return code, canonical_json(result)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else 0
    handler = HANDLERS[args.command]
    try:
        code, result, input_paths, output_files = handler(args)
    except CommandError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return exc.code
    except InputFormatError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_INPUT

    result_text = canonical_json(result)
    manifest = build_manifest(
        command=args.command,
        parameters={"argv": argv[1:]},  # the subcommand is always argv[0]
        seed=getattr(args, "seed", 0),
        version=__version__,
        input_paths=input_paths,
        result_text=result_text,
        output_files=output_files,
    )
    document = {
        "schema": "bergex/1",
        "kind": f"{args.command}-result",
        "result": result,
        "manifest": manifest.to_doc(),
    }
    print(canonical_json(document))
    out = getattr(args, "output", None)
    if out:
        Path(out + ".manifest.json").write_text(canonical_json(manifest.to_doc()) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
