"""Command-line front end: detection, oracles, solvers, builders and the diff driver."""

from __future__ import annotations

import argparse
import json
import sys

from .dcs import DCSInstance, ResourceLimitError, solve_dcs, solve_dcs_minimal
from .detectors import detect
from .graphs import Graph, encode_graph, generate, parse_graph
from .harness import PlantSpec, gnp_corpus, exhaustive_corpus, plant_model, run_differential
from .models import model_from_json, model_to_json, model_violation
from .oracle import (
    BUDGET_EXCEEDED,
    YES,
    OracleBudget,
    brute_force_induced_minor,
    brute_force_windmill,
)
from .patterns import PATTERN_NAMES, pattern
from .windmill import (
    I2DPInstance,
    TwoInAHoleInstance,
    WindmillParams,
    reduce_2iah_to_windmill,
    reduce_i2dp_to_windmill,
)

EXIT_FOUND = 0
EXIT_NOT_FOUND = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_graph(path: str, fmt: str) -> Graph:
    return parse_graph(_read_text(path), fmt)


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x != ""]


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="indminor")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", help="decide pattern containment as an induced minor")
    p.add_argument("--pattern", required=True, help="|".join(PATTERN_NAMES))
    p.add_argument("--input", required=True)
    p.add_argument("--format", default="graph6", choices=["graph6", "edgelist"])
    p.add_argument("--emit-model")
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--stage", default="full", choices=["small", "full"], help="h2 only")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("oracle", help="brute-force induced-minor ground truth")
    p.add_argument("--host", required=True)
    p.add_argument("--format", default="graph6", choices=["graph6", "edgelist"])
    p.add_argument("--pattern")
    p.add_argument("--pattern-file")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--node-limit", type=int, default=5_000_000)

    p = sub.add_parser("verify", help="check a model JSON against a host graph")
    p.add_argument("--input", required=True)
    p.add_argument("--format", default="graph6", choices=["graph6", "edgelist"])
    p.add_argument("--model", required=True)

    p = sub.add_parser("solve-dcs", help="k disjoint connected subgraphs")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", default="graph6", choices=["graph6", "edgelist"])
    p.add_argument("--terminals", required=True, help='e.g. "0,3|5|7,9"')
    p.add_argument("--minimal", action="store_true")
    p.add_argument("--node-limit", type=int)

    p = sub.add_parser("windmill", help="brute-force windmill detection")
    p.add_argument("--input", required=True)
    p.add_argument("--format", default="graph6", choices=["graph6", "edgelist"])
    p.add_argument("--params", required=True, help="a,b,c,d")
    p.add_argument("--max-n", type=int, default=30)
    p.add_argument("--node-limit", type=int, default=5_000_000)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("reduce", help="build windmill instances from source problems")
    p.add_argument("--from", dest="source", required=True, choices=["2iah", "i2dp"])
    p.add_argument("--input", required=True)
    p.add_argument("--format", default="edgelist", choices=["graph6", "edgelist"])
    p.add_argument("--x", required=True, help="2iah: x; i2dp: x',x''")
    p.add_argument("--y", required=True, help="2iah: y; i2dp: y',y''")
    p.add_argument("--params", required=True, help="a,b,c,d")
    p.add_argument("--out")

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("--kind", required=True, help="path:5 cycle:6 clique:4 star:5 pattern:h2 gnp:8,0.5,1")
    p.add_argument("--format", default="graph6", choices=["graph6", "edgelist"])
    p.add_argument("--out")

    p = sub.add_parser("plant", help="plant a known model inside a noisy host")
    p.add_argument("--pattern", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bag-sizes", required=True, help="comma list in label order")
    p.add_argument("--noise", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", default="graph6", choices=["graph6", "edgelist"])
    p.add_argument("--out")
    p.add_argument("--emit-model")

    p = sub.add_parser("difftest", help="detector vs oracle over a corpus")
    p.add_argument("--pattern", required=True)
    p.add_argument("--corpus", required=True, help="exhaustive:N or gnp:count,nmin,nmax,p,seed")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--node-limit", type=int, default=5_000_000)
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    return top


def _cmd_detect(args) -> int:
    g = _load_graph(args.input, args.format)
    model = detect(g, args.pattern, prune=not args.no_prune, h2_stage=args.stage)
    if model is None:
        return EXIT_NOT_FOUND
    if args.emit_model:
        _write_text(args.emit_model, model_to_json(model) + "\n")
    return EXIT_FOUND


def _cmd_oracle(args) -> int:
    g = _load_graph(args.host, args.format)
    if bool(args.pattern) == bool(args.pattern_file):
        print("exactly one of --pattern/--pattern-file is required", file=sys.stderr)
        return EXIT_USAGE
    target = pattern(args.pattern) if args.pattern else parse_graph(_read_text(args.pattern_file))
    budget = OracleBudget(max_host_vertices=args.max_n, node_limit=args.node_limit)
    ans = brute_force_induced_minor(g, target, budget)
    payload = {"answer": ans.status}
    if ans.model is not None:
        payload["model"] = json.loads(model_to_json(ans.model))
    print(json.dumps(payload, sort_keys=True))
    if ans.status == BUDGET_EXCEEDED:
        return EXIT_RESOURCE
    return EXIT_FOUND if ans.status == YES else EXIT_NOT_FOUND


def _cmd_verify(args) -> int:
    g = _load_graph(args.input, args.format)
    model = model_from_json(_read_text(args.model))
    why = model_violation(g, model)
    if why is None:
        print("valid")
        return EXIT_FOUND
    print(f"invalid: {why}")
    return EXIT_NOT_FOUND


def _cmd_solve_dcs(args) -> int:
    g = _load_graph(args.graph, args.format)
    terminals = tuple(frozenset(_int_list(part)) for part in args.terminals.split("|"))
    inst = DCSInstance(g, terminals)
    solver = solve_dcs_minimal if args.minimal else solve_dcs
    try:
        sol = solver(inst, args.node_limit)
    except ResourceLimitError:
        print("resource limit exceeded", file=sys.stderr)
        return EXIT_RESOURCE
    if sol is None:
        print("infeasible")
        return EXIT_NOT_FOUND
    print(json.dumps({"sets": [sorted(s) for s in sol.sets]}))
    return EXIT_FOUND


def _cmd_windmill(args) -> int:
    g = _load_graph(args.input, args.format)
    a, b, c, d = _int_list(args.params)
    budget = OracleBudget(max_host_vertices=args.max_n, node_limit=args.node_limit)
    ans = brute_force_windmill(g, a, b, c, d, budget)
    if args.json:
        payload = {"answer": ans.status}
        if ans.status == YES:
            payload.update({"p": list(ans.p), "q": list(ans.q), "centre": ans.centre})
        print(json.dumps(payload, sort_keys=True))
    if ans.status == BUDGET_EXCEEDED:
        return EXIT_RESOURCE
    return EXIT_FOUND if ans.status == YES else EXIT_NOT_FOUND


def _cmd_reduce(args) -> int:
    g = _load_graph(args.input, args.format)
    a, b, c, d = _int_list(args.params)
    params = WindmillParams(a, b, c, d)
    if args.source == "2iah":
        (x,) = _int_list(args.x)
        (y,) = _int_list(args.y)
        result = reduce_2iah_to_windmill(TwoInAHoleInstance(g, x, y), params)
    else:
        xp, xpp = _int_list(args.x)
        yp, ypp = _int_list(args.y)
        result = reduce_i2dp_to_windmill(I2DPInstance(g, xp, xpp, yp, ypp), params)
    _write_text(args.out, encode_graph(result.graph, "graph6") + "\n")
    landmarks = {
        "z": result.z,
        "attachments": result.attachments,
        "pendants": {k: list(v) for k, v in result.pendants.items()},
        "vertex_map": {str(k): v for k, v in sorted(result.vertex_map.items())},
    }
    print(json.dumps(landmarks, sort_keys=True))
    return EXIT_FOUND


def _cmd_gen(args) -> int:
    kind, _, rest = args.kind.partition(":")
    params = rest.split(",") if rest else []
    g = generate(kind, *params)
    _write_text(args.out, encode_graph(g, args.format) + ("\n" if args.format == "graph6" else ""))
    return EXIT_FOUND


def _cmd_plant(args) -> int:
    spec = PlantSpec(
        pattern=args.pattern,
        n=args.n,
        bag_sizes=tuple(_int_list(args.bag_sizes)),
        noise=args.noise,
        seed=args.seed,
    )
    g, model = plant_model(spec)
    _write_text(args.out, encode_graph(g, args.format) + ("\n" if args.format == "graph6" else ""))
    if args.emit_model:
        _write_text(args.emit_model, model_to_json(model) + "\n")
    return EXIT_FOUND


def _parse_corpus(text: str):
    kind, _, rest = text.partition(":")
    if kind == "exhaustive":
        return exhaustive_corpus(int(rest))
    if kind == "gnp":
        count, nmin, nmax, p, seed = rest.split(",")
        sizes = list(range(int(nmin), int(nmax) + 1))
        return gnp_corpus(int(count), sizes, [float(p)], int(seed))
    raise ValueError(f"unknown corpus {text!r}")


def _cmd_difftest(args) -> int:
    graphs = _parse_corpus(args.corpus)
    budget = OracleBudget(max_host_vertices=args.max_n, node_limit=args.node_limit)
    report = run_differential(
        args.pattern, graphs, budget=budget, prune=not args.no_prune, jobs=args.jobs
    )
    if args.out:
        _write_text(args.out, report.canonical_text())
    print(json.dumps(report.summary(), sort_keys=True))
    return EXIT_FOUND if report.mismatches == 0 else EXIT_NOT_FOUND


_COMMANDS = {
    "detect": _cmd_detect,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
    "solve-dcs": _cmd_solve_dcs,
    "windmill": _cmd_windmill,
    "reduce": _cmd_reduce,
    "gen": _cmd_gen,
    "plant": _cmd_plant,
    "difftest": _cmd_difftest,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
