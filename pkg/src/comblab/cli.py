"""Command-line entry point.

JSON goes to stdout (or --out), a one-line human summary to stderr.  Exit
codes: 0 for ok/true, 1 for checked-and-failed, 2 for usage or contract
errors, 3 for resource bounds.  Outputs are byte-stable for a fixed
invocation and seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cographs as cographs_mod
from . import combs as combs_mod
from . import genericity as genericity_mod
from . import patterns as patterns_mod
from . import transforms as transforms_mod
from . import verify as verify_mod
from .combs import CombClass, LITERAL, OMEGA, RECURSIVE
from .errors import ArgumentError, ComblabError, ParseError, ResourceError
from .index_core import decode, encode
from .patterns import DEFAULT_SEED, SetSystem

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _bound(value: str):
    if value in ("omega", "w"):
        return OMEGA
    try:
        return int(value)
    except ValueError:
        raise ArgumentError(f"expected an integer or 'omega', got {value!r}")


def _read_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _emit(payload, out_path: str, raw: str = None) -> None:
    text = raw if raw is not None else json.dumps(payload, sort_keys=True,
                                                  separators=(",", ":")) + "\n"
    if out_path == "-":
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _summary(line: str) -> None:
    print(line, file=sys.stderr)


def _decode_node_index(raw):
    return decode(raw)


def _decode_grid_index(raw) -> tuple:
    if isinstance(raw, str):
        parts = raw.split(",")
        if len(parts) != 2:
            raise ParseError(f"grid index must look like 'i,j', got {raw!r}")
        return (int(parts[0]), int(parts[1]))
    return (int(raw[0]), int(raw[1]))


def _decode_vertex_index(raw) -> int:
    return int(raw)


_INDEX_DECODERS = {
    "node": _decode_node_index,
    "grid": _decode_grid_index,
    "vertex": _decode_vertex_index,
}


def _load_system(path: str, kind: str) -> SetSystem:
    return SetSystem.from_json(_read_json(path), _INDEX_DECODERS[kind])


def _comb_class(args) -> CombClass:
    reading = LITERAL if getattr(args, "literal", False) else RECURSIVE
    if args.kind == "wide-right":
        return CombClass("wide-right", _bound(args.n), reading)
    return CombClass(args.kind, _bound(args.n))


def _report_exit(report, out_path: str) -> int:
    _emit(report.to_json(), out_path)
    _summary("ok" if report.ok else
             f"FAILED with {len(report.violations)} reported violation(s)")
    return EXIT_OK if report.ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="comblab",
        description="checkers, witnesses, and transforms for comb/weave/grid/cograph patterns")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--out", default="-", help="output path (default stdout)")
        return p

    p = add("enum-combs", help="enumerate combs of a class at a depth")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--kind", choices=("up", "right", "wide-right"), required=True)
    p.add_argument("-n", default="omega", help="size bound for lower parts (or 'omega')")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--literal", action="store_true",
                   help="use the literal wide reading (parts must be narrow)")

    p = add("classify-pair", help="up/wide dichotomy for two equal-depth nodes")
    p.add_argument("first")
    p.add_argument("second")

    p = add("check-weave", help="check the weave conditions on a node-indexed family")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-m", default="omega")
    p.add_argument("-n", default="omega")
    p.add_argument("--strong", action="store_true")
    p.add_argument("--literal", action="store_true")
    p.add_argument("--in", dest="path", default="-")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--max-violations", type=int, default=10)

    p = add("check-grid", help="check the grid conditions on a square-indexed family")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--strong", action="store_true")
    p.add_argument("--in", dest="path", default="-")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--max-violations", type=int, default=10)

    p = add("check-graph-pattern", help="check a vertex-indexed family against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--in", dest="path", default="-")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--max-violations", type=int, default=10)

    p = add("realizable", help="decide template realizability; emit a witness system")
    p.add_argument("--in", dest="path", default="-")

    p = add("witness", help="build a canonical passing family")
    p.add_argument("kind", choices=("weave", "grid", "graph"))
    p.add_argument("--depth", type=int)
    p.add_argument("--size", type=int)
    p.add_argument("-k", type=int, default=2)
    p.add_argument("-m", default="omega")
    p.add_argument("-n", default="omega")
    p.add_argument("--genuine-k", action="store_true")
    p.add_argument("--strong", action="store_true")
    p.add_argument("--graph")

    p = add("strongify", help="depth-doubling index map, or pull a family along it")
    p.add_argument("--depth", type=int)
    p.add_argument("--in", dest="path")

    p = add("pullback", help="reindex a family along a prefix-respecting map")
    p.add_argument("--map", dest="map_path", required=True)
    p.add_argument("--in", dest="path", default="-")

    p = add("grid-embed", help="embedding of a level into the square")
    p.add_argument("--depth", type=int, required=True)

    p = add("grid-to-weave", help="pull a grid family back onto a level")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--in", dest="path", default="-")

    p = add("eps-scale", help="reindex a grid family by symbolic infinitesimal scaling")
    p.add_argument("--in", dest="path", default="-")

    p = add("cotree", help="recognize a cograph; emit its cotree orature path certificate")
    p.add_argument("--in", dest="path", default="-")
    p.add_argument("--dot", action="store_true")

    p = add("find-p4", help="first induced four-path, if any")
    p.add_argument("--in", dest="path", default="-")

    p = add("comb-graph", help="the up-pair graph of a level, with its cotree")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--dot", action="store_true")

    p = add("embed-cograph", help="embed a cotree's vertices into a level")
    p.add_argument("--in", dest="path", default="-")

    p = add("bridge", help="move between graph patterns and level families")
    p.add_argument("direction", choices=("to-weave", "to-graph"))
    p.add_argument("--depth", type=int)
    p.add_argument("--cotree")
    p.add_argument("--in", dest="path", default="-")

    p = add("triangle-free-demo", help="pair-indexed demo: inconsistent pairs vs a free side")
    p.add_argument("--len", dest="length", type=int, required=True)

    p = add("generic-chain", help="meet dense requirements through a poset")
    p.add_argument("--in", dest="path")
    p.add_argument("--demo", action="store_true",
                   help="run the built-in binary-string length demo")
    p.add_argument("--steps", type=int)
    p.add_argument("--horizon", type=int, default=genericity_mod.DEFAULT_HORIZON)

    p = add("verify-paper", help="run the structural self-check battery")
    p.add_argument("--max-depth", type=int, default=2)
    p.add_argument("--seed", type=lambda v: int(v, 0), default=DEFAULT_SEED)

    return parser


def _cmd_enum_combs(args) -> int:
    cls = _comb_class(args)
    combs = list(combs_mod.enumerate_combs(args.depth, cls, args.max_size))
    payload = [sorted(encode(node) for node in comb) for comb in combs]
    _emit(payload, args.out)
    _summary(f"{len(payload)} comb(s)")
    return EXIT_OK


def _cmd_classify_pair(args) -> int:
    verdict = combs_mod.classify_pair(decode(args.first), decode(args.second))
    _emit({"verdict": verdict}, args.out)
    _summary(verdict)
    return EXIT_OK


def _cmd_check_weave(args) -> int:
    ci = _load_system(args.path, "node")
    report = patterns_mod.check_weave(
        ci, args.depth, args.k, _bound(args.m), _bound(args.n),
        strong=args.strong,
        reading=LITERAL if args.literal else RECURSIVE,
        cap=args.cap, max_violations=args.max_violations)
    return _report_exit(report, args.out)


def _cmd_check_grid(args) -> int:
    ci = _load_system(args.path, "grid")
    report = patterns_mod.check_grid(ci, args.size, args.k, strong=args.strong,
                                     cap=args.cap, max_violations=args.max_violations)
    return _report_exit(report, args.out)


def _cmd_check_graph_pattern(args) -> int:
    graph = cographs_mod.Graph.from_json(_read_json(args.graph))
    ci = _load_system(args.path, "vertex")
    report = patterns_mod.check_graph_pattern(ci, graph, cap=args.cap,
                                              max_violations=args.max_violations)
    return _report_exit(report, args.out)


def _cmd_realizable(args) -> int:
    payload = _read_json(args.path)
    template = patterns_mod.Template.make(
        payload["indices"],
        [frozenset(s) for s in payload["must_consist"]],
        [frozenset(s) for s in payload["must_k_inconsist"]],
        payload["k"])
    system = patterns_mod.realizable(template)
    if system is None:
        _emit(None, args.out)
        _summary("not realizable")
        return EXIT_FAILED
    _emit(system.to_json(), args.out)
    _summary(f"realizable with {len(system.universe)} atom(s)")
    return EXIT_OK


def _cmd_witness(args) -> int:
    if args.kind == "weave":
        if args.depth is None:
            raise ArgumentError("witness weave requires --depth")
        system = patterns_mod.weave_witness(args.depth, args.k, _bound(args.m),
                                            _bound(args.n), genuine_k=args.genuine_k)
    elif args.kind == "grid":
        if args.size is None:
            raise ArgumentError("witness grid requires --size")
        system = patterns_mod.grid_witness(args.size, args.k, strong=args.strong)
    else:
        if args.graph is None:
            raise ArgumentError("witness graph requires --graph")
        graph = cographs_mod.Graph.from_json(_read_json(args.graph))
        system = patterns_mod.graph_witness(graph, materialize=True)
    _emit(system.to_json(), args.out)
    _summary(f"universe of {len(system.universe)} atom(s)")
    return EXIT_OK


def _cmd_strongify(args) -> int:
    if args.path is None:
        if args.depth is None:
            raise ArgumentError("strongify requires --depth or --in")
        fmap = transforms_mod.strongify_index(args.depth)
        _emit(fmap.to_json(), args.out)
        _summary(f"map of {len(fmap.mapping)} node(s)")
        return EXIT_OK
    ci = _load_system(args.path, "node")
    pulled = transforms_mod.strongify_weave(ci)
    _emit(pulled.to_json(), args.out)
    _summary(f"pulled back to {len(pulled.indices)} node(s)")
    return EXIT_OK


def _cmd_pullback(args) -> int:
    fmap = transforms_mod.IndexMap.from_json(_read_json(args.map_path))
    ci = _load_system(args.path, "node")
    pulled = transforms_mod.pullback(ci, fmap)
    _emit(pulled.to_json(), args.out)
    _summary(f"pulled back to {len(pulled.indices)} node(s)")
    return EXIT_OK


def _cmd_grid_embed(args) -> int:
    fmap = transforms_mod.grid_embed_index(args.depth)
    _emit(fmap.to_json(), args.out)
    _summary(f"map of {len(fmap.mapping)} node(s)")
    return EXIT_OK


def _cmd_grid_to_weave(args) -> int:
    ci = _load_system(args.path, "grid")
    pulled = transforms_mod.grid_to_weave(ci, args.depth)
    _emit(pulled.to_json(), args.out)
    _summary(f"pulled back to {len(pulled.indices)} node(s)")
    return EXIT_OK


def _cmd_eps_scale(args) -> int:
    ci = _load_system(args.path, "grid")
    scaled = transforms_mod.epsilon_scale(ci)

    def encode_eps(index):
        return json.dumps([index[0].to_json(), index[1].to_json()],
                          separators=(",", ":"))

    _emit(scaled.to_json(index_encoder=encode_eps), args.out)
    _summary(f"scaled {len(scaled.indices)} point(s)")
    return EXIT_OK


def _cmd_cotree(args) -> int:
    graph = cographs_mod.Graph.from_json(_read_json(args.path))
    result = cographs_mod.cotree_of(graph)
    if isinstance(result, cographs_mod.Cotree):
        if args.dot:
            _emit(None, args.out, raw=result.to_dot())
        else:
            _emit(result.to_json(), args.out)
        _summary("cograph")
        return EXIT_OK
    _emit(result.to_json(), args.out)
    _summary(f"induced four-path {list(result)}")
    return EXIT_FAILED


def _cmd_find_p4(args) -> int:
    graph = cographs_mod.Graph.from_json(_read_json(args.path))
    cert = cographs_mod.find_p4(graph)
    if cert is None:
        _emit(None, args.out)
        _summary("no induced four-path")
        return EXIT_OK
    _emit(cert.to_json(), args.out)
    _summary(f"induced four-path {list(cert)}")
    return EXIT_FAILED


def _cmd_comb_graph(args) -> int:
    graph, tree = cographs_mod.comb_graph(args.depth)
    if args.dot:
        _emit(None, args.out, raw=graph.to_dot())
    else:
        _emit({"graph": graph.to_json(), "cotree": tree.to_json()}, args.out)
    _summary(f"{graph.n} vertices, {len(graph.edges)} edge(s)")
    return EXIT_OK


def _cmd_embed_cograph(args) -> int:
    tree = cographs_mod.Cotree.from_json(_read_json(args.path))
    depth, mapping = cographs_mod.embed_cograph(tree)
    payload = {"depth": depth,
               "map": {str(v): encode(node) for v, node in sorted(mapping.items())}}
    _emit(payload, args.out)
    _summary(f"embedded {len(mapping)} vertex(es) at depth {depth}")
    return EXIT_OK


def _cmd_bridge(args) -> int:
    if args.direction == "to-weave":
        if args.depth is None:
            raise ArgumentError("bridge to-weave requires --depth")
        pattern = _load_system(args.path, "vertex")
        out = cographs_mod.graph_to_weave_oracle(pattern, args.depth)
        _emit(out.to_json(), args.out)
        _summary(f"weave family on {len(out.indices)} node(s)")
        return EXIT_OK
    if args.cotree is None:
        raise ArgumentError("bridge to-graph requires --cotree")
    tree = cographs_mod.Cotree.from_json(_read_json(args.cotree))
    ci = _load_system(args.path, "node")
    out = cographs_mod.weave_to_graph_oracle(ci, tree)
    _emit(out.to_json(), args.out)
    _summary(f"pattern on {len(out.indices)} vertex(es)")
    return EXIT_OK


def _cmd_triangle_free_demo(args) -> int:
    length = args.length
    p_side, q_side = patterns_mod.triangle_free_demo(length)
    pair_checks = [[i, j, p_side.consistent((i, j))]
                   for i in range(length) for j in range(i + 1, length)]
    payload = {
        "len": length,
        "edges": [[list(a), list(b)] for a, b in patterns_mod.demo_edges(length)],
        "p_singletons_consistent": all(p_side.consistent((i,)) for i in range(length)),
        "p_pairs_consistent": pair_checks,
        "q_full_family_consistent": q_side.consistent(range(length)),
    }
    _emit(payload, args.out)
    ok = payload["p_singletons_consistent"] and \
        not any(row[2] for row in pair_checks) and \
        payload["q_full_family_consistent"]
    _summary("demo holds" if ok else "demo violated")
    return EXIT_OK if ok else EXIT_FAILED


def _cmd_generic_chain(args) -> int:
    if args.demo:
        poset = genericity_mod.binary_string_poset()
        dense = genericity_mod.length_requirements(5)
        start = ""
        steps = args.steps if args.steps is not None else 5
    else:
        if args.path is None:
            raise ArgumentError("generic-chain requires --in or --demo")
        payload = _read_json(args.path)
        poset = genericity_mod.RequirementPoset.from_table(
            payload["elements"], [tuple(p) for p in payload["order"]])
        members = {entry["name"]: set(entry["members"]) for entry in payload["dense"]}
        dense = [genericity_mod.DensePredicate(name, (lambda ms: lambda e: e in ms)(ms))
                 for name, ms in members.items()]
        start = payload["start"]
        steps = args.steps if args.steps is not None else payload.get("steps", len(dense))
    try:
        chain = genericity_mod.generic_chain(poset, dense, start, steps,
                                             horizon=args.horizon)
    except genericity_mod.DensityError as err:
        _emit({"error": "density", "requirement": err.requirement,
               "stuck_at": err.stuck_at}, args.out)
        _summary(f"requirement {err.requirement!r} stuck at {err.stuck_at!r}")
        return EXIT_FAILED
    payload = [{"element": step.element, "satisfied": list(step.satisfied)}
               for step in chain]
    _emit(payload, args.out)
    _summary(f"chain of {len(chain)} element(s)")
    return EXIT_OK


def _cmd_verify_paper(args) -> int:
    checks = verify_mod.run_battery(args.max_depth, args.seed)
    for check in checks:
        _summary(f"{'ok  ' if check.ok else 'FAIL'} {check.name}: {check.detail}")
    ok = all(check.ok for check in checks)
    _emit({"ok": ok, "checks": [check.to_json() for check in checks]}, args.out)
    return EXIT_OK if ok else EXIT_FAILED


_COMMANDS = {
    "enum-combs": _cmd_enum_combs,
    "classify-pair": _cmd_classify_pair,
    "check-weave": _cmd_check_weave,
    "check-grid": _cmd_check_grid,
    "check-graph-pattern": _cmd_check_graph_pattern,
    "realizable": _cmd_realizable,
    "witness": _cmd_witness,
    "strongify": _cmd_strongify,
    "pullback": _cmd_pullback,
    "grid-embed": _cmd_grid_embed,
    "grid-to-weave": _cmd_grid_to_weave,
    "eps-scale": _cmd_eps_scale,
    "cotree": _cmd_cotree,
    "find-p4": _cmd_find_p4,
    "comb-graph": _cmd_comb_graph,
    "embed-cograph": _cmd_embed_cograph,
    "bridge": _cmd_bridge,
    "triangle-free-demo": _cmd_triangle_free_demo,
    "generic-chain": _cmd_generic_chain,
    "verify-paper": _cmd_verify_paper,
}


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except ResourceError as err:
        _summary(f"resource bound: {err}")
        return EXIT_RESOURCE
    except (ArgumentError, ParseError) as err:
        _summary(f"error: {err}")
        return EXIT_USAGE
    except ComblabError as err:
        _summary(f"error: {err}")
        return EXIT_USAGE
    except FileNotFoundError as err:
        _summary(f"error: {err}")
        return EXIT_USAGE
    except (KeyError, ValueError, TypeError) as err:
        _summary(f"malformed input: {err!r}")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
