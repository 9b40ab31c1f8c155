"""Command-line interface: generation, path computation, verification suites.

Exit codes: 0 when every requested verification passes, 1 on a verification
failure, 2 on usage or input errors, 3 when a search budget runs out. All
output is deterministic for a fixed argument vector (seeds included), and
reports echo the seed they were run with.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from .cantorminor import cantor_subgraph, farey_minor_assembly, halved_farey_iso
from .core import (
    dumps_canonical,
    graph_from_json,
    graph_to_json,
    parse_label,
    vertex_str,
)
from .errors import BudgetExceededError, StructureError, WhirlgraphError
from .farey import farey_graph, halved_farey, stern_brocot_check
from .pathsys import (
    max_edge_disjoint,
    min_edge_system,
    random_edge_disjoint_system,
    uncross,
    validate_system,
)
from .ubiquity import (
    all_paths,
    exists_compatible_bruteforce,
    minimal_containment_level,
    refute_compatibility,
    zigzag_window,
)
from .whirl import (
    LevelWindow,
    check_interval_traversal,
    graph_upto,
    level_vertices,
    whirl_dot,
    whirl_graph,
)

ZERO_ONE = (parse_label("0/1"), parse_label("1/1"))


@dataclass
class CommandOutcome:
    """What a CLI invocation produced: exit code, files, structured report."""

    exit_code: int
    artifacts: tuple = ()
    report: dict | None = None


def _emit(report):
    print(dumps_canonical(report))


def _verdict(report):
    _emit(report)
    code = 0 if report.get("ok", False) else 1
    return CommandOutcome(exit_code=code, report=report)


def _cmd_gen_whirl(args):
    g = whirl_graph(LevelWindow(args.low, args.high))
    if args.format == "dot":
        sys.stdout.write(whirl_dot(g))
        return CommandOutcome(exit_code=0)
    report = graph_to_json(g)
    _emit(report)
    return CommandOutcome(exit_code=0, report=report)


def _farey_dot(graph, blue=frozenset()):
    lines = ["graph farey {", "  node [shape=circle];"]
    for v in graph.sorted_vertices():
        lines.append(f'  "{v}";')
    for a, b in graph.sorted_edges():
        color = "blue" if frozenset((a, b)) in blue else "black"
        lines.append(f'  "{a}" -- "{b}" [color={color}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_gen_farey(args):
    if args.halved:
        colored = halved_farey(args.order)
        if args.format == "dot":
            sys.stdout.write(_farey_dot(colored.graph, colored.blue))
            return CommandOutcome(exit_code=0)
        report = colored.as_json()
    else:
        g = farey_graph(args.order)
        if args.format == "dot":
            sys.stdout.write(_farey_dot(g))
            return CommandOutcome(exit_code=0)
        report = graph_to_json(g)
    _emit(report)
    return CommandOutcome(exit_code=0, report=report)


def _cmd_gen_gstar(args):
    graph, matching = cantor_subgraph(args.level)
    report = graph_to_json(
        graph,
        extra={
            "matching": [
                [vertex_str(a), vertex_str(b)] for a, b in matching.sorted_edges()
            ]
        },
    )
    _emit(report)
    return CommandOutcome(exit_code=0, report=report)


def _cmd_paths(args):
    with open(args.graph, "r", encoding="utf-8") as handle:
        g = graph_from_json(json.load(handle))
    u = parse_label(args.u)
    v = parse_label(args.v)
    if args.method == "maxflow":
        system = max_edge_disjoint(g, u, v)
    elif args.method == "mincost":
        system = min_edge_system(g, u, v, args.k)
    else:
        rng = random.Random(args.seed)
        system = uncross(random_edge_disjoint_system(g, u, v, args.k, rng))
    report = {
        "method": args.method,
        "seed": args.seed,
        "size": system.size,
        "totalEdges": system.total_edges,
        "system": system.as_json(),
        "validation": validate_system(system).as_json(),
    }
    _emit(report)
    return CommandOutcome(exit_code=0, report=report)


def _random_simple_path(graph, u, v, rng):
    """Seeded random u-v path: depth-first with shuffled neighbour order."""
    seq = [u]
    on_path = {u}
    stack = [_shuffled(graph.neighbors(u), rng)]
    while stack:
        candidates = stack[-1]
        while candidates:
            y = candidates.pop()
            if y in on_path:
                continue
            if y == v:
                return seq + [y]
            seq.append(y)
            on_path.add(y)
            stack.append(_shuffled(graph.neighbors(y), rng))
            break
        else:
            stack.pop()
            on_path.discard(seq.pop())
    raise StructureError("no path between the sampled endpoints")


def _shuffled(items, rng):
    out = list(items)
    rng.shuffle(out)
    return out


def _cmd_verify_lemma22(args):
    from .core import Path

    window = LevelWindow(args.level, args.level + 1)
    g = whirl_graph(window)
    grid = list(level_vertices(args.level - 1))
    rng = random.Random(args.seed)
    results = []
    ok = True
    for _ in range(args.samples):
        u, v = sorted(rng.sample(grid, 2))
        path = Path(g, _random_simple_path(g, u, v, rng))
        rep = check_interval_traversal(path, u, v, args.level)
        ok = ok and rep.ok
        results.append(
            {
                "u": vertex_str(u),
                "v": vertex_str(v),
                "pathEdges": path.edge_count,
                "ok": rep.ok,
            }
        )
    return _verdict(
        {
            "check": "lemma22",
            "level": args.level,
            "samples": args.samples,
            "seed": args.seed,
            "results": results,
            "ok": ok,
        }
    )


def _cmd_verify_kneip(args):
    g = graph_upto(args.level)
    rng = random.Random(args.seed)
    verts = g.sorted_vertices()
    ok = True
    trials = []
    for _ in range(args.trials):
        u, v = rng.sample(verts, 2)
        bound = max_edge_disjoint(g, u, v).size
        k = rng.randint(1, bound)
        minimal = min_edge_system(g, u, v, k)
        repaired = uncross(random_edge_disjoint_system(g, u, v, k, rng))
        good = (
            minimal.size == k
            and repaired.size == k
            and validate_system(minimal).ok
            and validate_system(repaired).ok
            and minimal.total_edges <= repaired.total_edges
        )
        ok = ok and good
        trials.append(
            {
                "u": vertex_str(u),
                "v": vertex_str(v),
                "k": k,
                "minimalEdges": minimal.total_edges,
                "uncrossedEdges": repaired.total_edges,
                "ok": good,
            }
        )
    return _verdict(
        {
            "check": "kneip",
            "level": args.level,
            "trials": args.trials,
            "seed": args.seed,
            "results": trials,
            "ok": ok,
        }
    )


def _cmd_verify_theorem1(args):
    zero, one = ZERO_ONE
    windows = [LevelWindow(2, t) for t in range(2, max(args.level, 2) + 1)]
    ok = True
    swept = []
    for window in windows:
        g = whirl_graph(window)
        checked = 0
        for p in all_paths(g, zero, one, max_edges=10, budget=args.budget):
            witness = zigzag_window(p)
            top = minimal_containment_level(p)
            nxt = LevelWindow(top + 1, top + 1)
            refuted = 0
            for q in all_paths(whirl_graph(nxt), zero, one, budget=args.budget):
                refute_compatibility(p, q)
                refuted += 1
            found = exists_compatible_bruteforce(p, nxt, budget=args.budget)
            good = witness is not None and refuted >= 1 and not found
            ok = ok and good
            checked += 1
        swept.append(
            {"window": [window.low, window.high], "paths": checked}
        )
    return _verdict(
        {
            "check": "theorem1",
            "level": args.level,
            "budget": args.budget,
            "windows": swept,
            "ok": ok,
        }
    )


def _cmd_verify_lemma31(args):
    vmap = halved_farey_iso(args.order)
    nested = True
    if args.order > 1:
        nested = vmap.extends(halved_farey_iso(args.order - 1))
    count = len(vmap)
    return _verdict(
        {
            "check": "lemma31",
            "order": args.order,
            "vertices": count,
            "nested": nested,
            "message": f"iso verified, {count} vertices",
            "ok": nested,
        }
    )


def _cmd_verify_theorem2(args):
    result = farey_minor_assembly(args.level)
    report = result.as_json()
    report["check"] = "theorem2"
    report["ok"] = True
    return _verdict(report)


def _cmd_verify_sternbrocot(args):
    report = stern_brocot_check(args.order).as_json()
    report["check"] = "sternbrocot"
    return _verdict(report)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="whirlgraph",
        description="Generate whirl/Farey truncations, compute edge-disjoint "
        "order-compatible path systems, and verify their structure.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-whirl", help="emit a level-window whirl graph")
    p.add_argument("--low", type=int, required=True)
    p.add_argument("--high", type=int, required=True)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=_cmd_gen_whirl)

    p = sub.add_parser("gen-farey", help="emit a Farey or halved-Farey truncation")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--halved", action="store_true")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=_cmd_gen_farey)

    p = sub.add_parser(
        "gen-gstar", help="emit the Cantor-endpoint subgraph and its matching"
    )
    p.add_argument("--level", type=int, required=True)
    p.set_defaults(func=_cmd_gen_gstar)

    p = sub.add_parser("paths", help="compute an edge-disjoint u-v path system")
    p.add_argument("--graph", required=True, help="graph JSON file")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--method", choices=("mincost", "uncross", "maxflow"), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_paths)

    v = sub.add_parser("verify", help="run a verification suite")
    vsub = v.add_subparsers(dest="verify_command", required=True)

    p = vsub.add_parser(
        "lemma22", help="sampled interval containment/ordering checks"
    )
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify_lemma22)

    p = vsub.add_parser(
        "kneip", help="edge-minimal and uncrossed systems are order-compatible"
    )
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify_kneip)

    p = vsub.add_parser(
        "theorem1", help="no higher-level path is compatible with a swept path"
    )
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--budget", type=int, default=10**6)
    p.set_defaults(func=_cmd_verify_theorem1)

    p = vsub.add_parser(
        "lemma31", help="contracted Cantor subgraph matches the halved Farey graph"
    )
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=_cmd_verify_lemma31)

    p = vsub.add_parser(
        "theorem2", help="double-copy assembly contracts onto the Farey graph"
    )
    p.add_argument("--level", type=int, required=True)
    p.set_defaults(func=_cmd_verify_theorem2)

    p = vsub.add_parser(
        "sternbrocot", help="recursion edges equal determinant-adjacent pairs"
    )
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=_cmd_verify_sternbrocot)

    return parser


def run(argv):
    """Dispatch an argument vector; never raises for expected failure modes."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return CommandOutcome(exit_code=2 if exc.code else 0)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CommandOutcome(exit_code=3)
    except StructureError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return CommandOutcome(exit_code=1)
    except (WhirlgraphError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CommandOutcome(exit_code=2)


def main():
    sys.exit(run(sys.argv[1:]).exit_code)


if __name__ == "__main__":
    main()
