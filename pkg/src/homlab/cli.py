"""Command-line surface over the laboratory.

One process runs one command. Exit status 0 means the command ran and
any claim it makes holds; 1 is a definitive negative answer (no
homomorphism, a failed verification, an empty interval); 2 means no
answer was reached: bad usage, an unmet precondition, or an exhausted
budget. A negative answer is never dressed up as an error, and an error
never as an answer.

All JSON output is canonical (sorted keys, fixed indentation), so the
same inputs and seed produce byte-identical files. DOT output keeps
vertex labels, which is where the constructions record what each vertex
is for.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from dataclasses import dataclass

from .errors import (
    BudgetExceededError,
    ConstructionRejectedError,
    GapError,
    HomlabError,
    InvalidParameterError,
    PreconditionError,
    StreamExhaustedError,
)
from .gadgets import (
    GadgetRecipe,
    build_block_family,
    build_cycle_block,
    build_indicator,
    density_witness,
    find_sparse_incomparable,
)
from .graphs import Digraph, Graph, analyze, complete_graph, make_cycle
from .intervals import (
    FAILS,
    embed_poset_into_interval,
    gadget_for_interval,
    phi,
    verify_embedding,
)
from .io import (
    dumps_embedding,
    dumps_graph,
    dumps_pointed,
    graph_to_obj,
    loads_embedding,
    loads_graph,
    loads_pointed,
    loads_poset,
    to_dot,
)
from .posets import FinitePoset, embed_poset_to_odd_sets, odd_sets_to_cycle_family
from .solver import SolverBudget, compare, core_of, hom_exists, is_rigid, path_threshold

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2

_ENV_TIMEOUT = "HOMLAB_TIMEOUT_SECS"


@dataclass(frozen=True)
class CommandSpec:
    """One resolved invocation: what runs, on which files, under which
    budget. The seed is carried for randomized corpora; every current
    command is deterministic and ignores it."""

    subcommand: str
    inputs: tuple[str, ...]
    output: str | None
    budget: SolverBudget
    seed: int
    format: str


def _resolve_budget(flag_value: float | None) -> SolverBudget:
    # The flag wins over the environment, the environment over the default.
    secs = flag_value
    if secs is None:
        raw = os.environ.get(_ENV_TIMEOUT)
        if raw is not None:
            try:
                secs = float(raw)
            except ValueError:
                raise InvalidParameterError(
                    f"{_ENV_TIMEOUT} must be a number, got {raw!r}") from None
    if secs is None:
        return SolverBudget()
    return SolverBudget(timeout_secs=secs)


def _read_text(path: str) -> str:
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _read_graph(path: str) -> Graph | Digraph:
    return loads_graph(_read_text(path))


def _read_undirected(path: str) -> Graph:
    g = _read_graph(path)
    if isinstance(g, Digraph):
        raise InvalidParameterError(f"{path} holds a digraph; an undirected graph is needed")
    return g


def _read_digraph(path: str) -> Digraph:
    g = _read_graph(path)
    if not isinstance(g, Digraph):
        raise InvalidParameterError(f"{path} holds an undirected graph; a digraph is needed")
    return g


def _emit(spec: CommandSpec, text: str) -> None:
    if spec.output is None:
        sys.stdout.write(text)
    else:
        with open(spec.output, "w", encoding="utf-8") as handle:
            handle.write(text)


def _emit_graph(spec: CommandSpec, g: Graph | Digraph) -> None:
    _emit(spec, to_dot(g) if spec.format == "dot" else dumps_graph(g))


def _finite(v: int | float) -> str:
    return "inf" if v == math.inf else str(v)


def _cmd_hom(args, spec: CommandSpec) -> int:
    source = _read_graph(args.source)
    target = _read_graph(args.target)
    witness = hom_exists(source, target, spec.budget)
    if witness is None:
        print("NONE (search exhausted)")
        return EXIT_NEGATIVE
    print(" ".join(f"{v}->{witness.assignment[v]}"
                   for v in range(source.vertex_count)) or "(empty mapping)")
    if spec.output is not None:
        _emit(spec, json.dumps({"assignment": list(witness.assignment)},
                               indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def _cmd_compare(args, spec: CommandSpec) -> int:
    verdict = compare(_read_graph(args.first), _read_graph(args.second), spec.budget)
    print(verdict.relation)
    return EXIT_OK


def _cmd_core(args, spec: CommandSpec) -> int:
    _emit_graph(spec, core_of(_read_graph(args.graph), spec.budget))
    return EXIT_OK


def _cmd_rigid(args, spec: CommandSpec) -> int:
    if is_rigid(_read_graph(args.graph), spec.budget):
        print("rigid")
        return EXIT_OK
    print("not rigid")
    return EXIT_NEGATIVE


def _cmd_analyze(args, spec: CommandSpec) -> int:
    g = _read_graph(args.graph)
    profile = analyze(g)
    print(f"vertices={g.vertex_count}")
    print(f"edges={g.edge_count}")
    print(f"connected={str(profile.connected).lower()}")
    print(f"bipartite={str(profile.bipartite).lower()}")
    print(f"girth={_finite(profile.girth)}")
    print(f"odd_girth={_finite(profile.odd_girth)}")
    return EXIT_OK


def _cmd_path_threshold(args, spec: CommandSpec) -> int:
    print(path_threshold(_read_graph(args.graph)))
    return EXIT_OK


def _cmd_embed_poset(args, spec: CommandSpec) -> int:
    if spec.format == "dot":
        raise InvalidParameterError(
            "dot output applies to single-graph commands; this one emits a JSON bundle")
    q = loads_poset(_read_text(args.poset))
    sets = embed_poset_to_odd_sets(q)
    obj = {
        "odd_sets": {x: sorted(sets[x]) for x in q.elements},
        "cycle_families": {x: graph_to_obj(odd_sets_to_cycle_family(sets[x]))
                           for x in q.elements},
    }
    _emit(spec, json.dumps(obj, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def _interval_bounds(args) -> tuple[Graph, Graph]:
    lower = _read_undirected(args.lower) if args.lower else make_cycle(5)
    upper = _read_undirected(args.upper) if args.upper else complete_graph(3)
    return lower, upper


def _family_parts(lower: Graph, upper: Graph, l: int | None, budget: SolverBudget):
    if l is None:
        l = max(5, upper.vertex_count)
        if l % 2 == 0:
            l += 1
    indicator = build_indicator(l, budget)
    sparse = find_sparse_incomparable(lower, upper, l + 2, budget=budget)
    return indicator, sparse, GadgetRecipe(l, 0, upper.vertex_count)


def _parse_members(raw: str) -> frozenset[int]:
    try:
        return frozenset(int(part) for part in raw.split(","))
    except ValueError:
        raise InvalidParameterError(
            f"members must be comma-separated integers, got {raw!r}") from None


def _cmd_build(args, spec: CommandSpec) -> int:
    if args.what == "indicator":
        built = build_indicator(args.l, spec.budget)
        for record in built.checks:
            print(f"check {record.name}: pass", file=sys.stderr)
        _emit(spec, to_dot(built.payload.graph) if spec.format == "dot"
              else dumps_pointed(built.payload))
        return EXIT_OK
    lower, upper = _interval_bounds(args)
    if args.what == "hp":
        indicator, sparse, recipe = _family_parts(lower, upper, args.l, spec.budget)
        _emit_graph(spec, build_cycle_block(args.p, recipe, sparse.graph,
                                            indicator.payload))
        return EXIT_OK
    if args.what == "ha":
        indicator, sparse, recipe = _family_parts(lower, upper, args.l, spec.budget)
        _emit_graph(spec, build_block_family(_parse_members(args.members), recipe,
                                             sparse.graph, indicator.payload, lower))
        return EXIT_OK
    if args.what == "gadget":
        gadget = gadget_for_interval(lower, upper, spec.budget)
        _emit(spec, to_dot(gadget.graph) if spec.format == "dot"
              else dumps_pointed(gadget))
        return EXIT_OK
    # what == "phi"
    g = _read_digraph(args.graph)
    gadget = (loads_pointed(_read_text(args.gadget)) if args.gadget
              else gadget_for_interval(lower, upper, spec.budget))
    _emit_graph(spec, phi(g, gadget))
    return EXIT_OK


def _cmd_embed_interval(args, spec: CommandSpec) -> int:
    q = loads_poset(_read_text(args.poset))
    g1 = _read_undirected(args.lower_bound)
    g2 = _read_undirected(args.upper_bound)
    embedding = embed_poset_into_interval(q, g1, g2, strategy=args.strategy,
                                          budget=spec.budget)
    _emit(spec, dumps_embedding(embedding))
    report = embedding.report
    assert report is not None
    print(f"verified: {len(report.claims)} claims hold", file=sys.stderr)
    return EXIT_OK


def _cmd_verify(args, spec: CommandSpec) -> int:
    embedding = loads_embedding(_read_text(args.embedding))
    report = verify_embedding(embedding, spec.budget)
    for c in report.claims:
        print(f"{c.claim}[{c.instance}]: {c.verdict} ({c.elapsed_secs:.2f}s)")
    print(f"overall: {'pass' if report.overall_pass else 'fail'}")
    if report.overall_pass:
        return EXIT_OK
    # A definitively failed claim refutes the embedding; claims that only
    # ran out of budget leave the question open.
    if any(c.verdict == FAILS for c in report.claims):
        return EXIT_NEGATIVE
    return EXIT_ERROR


def _cmd_demo(args, spec: CommandSpec) -> int:
    c5, k3 = make_cycle(5), complete_graph(3)

    print("== the order at its smallest: C5 -> K3 but never back")
    witness = hom_exists(c5, k3, spec.budget)
    assert witness is not None
    print("  C5 -> K3:", " ".join(f"{v}->{witness.assignment[v]}" for v in range(5)))
    print("  K3 -> C5:", "NONE (search exhausted)"
          if hom_exists(k3, c5, spec.budget) is None else "unexpected witness")

    print("== cores: two triangles fold to one")
    doubled = Graph(6, k3.edges + tuple((u + 3, v + 3) for u, v in k3.edges))
    print(f"  core has {core_of(doubled, spec.budget).vertex_count} vertices")

    print("== an indicator that survives all four checks")
    started = time.monotonic()
    indicator = build_indicator(5, spec.budget)
    names = ", ".join(record.name for record in indicator.checks)
    print(f"  {indicator.payload.graph.vertex_count} vertices; checks: {names}"
          f" ({time.monotonic() - started:.1f}s)")

    print("== a rigid interval gadget between C5 and K3")
    started = time.monotonic()
    gadget = gadget_for_interval(c5, k3, spec.budget)
    print(f"  {gadget.graph.vertex_count} vertices"
          f" ({time.monotonic() - started:.1f}s)")

    print("== an antichain realized strictly between C5 and K3")
    started = time.monotonic()
    embedding = embed_poset_into_interval(FinitePoset(("x", "y")), c5, k3,
                                          budget=spec.budget, gadget=gadget)
    report = embedding.report
    assert report is not None and report.overall_pass
    sizes = ", ".join(f"{x}: {embedding.graph(x).vertex_count}v"
                      for x in ("x", "y"))
    print(f"  {sizes}; {len(report.claims)} claims verified"
          f" ({time.monotonic() - started:.1f}s)")

    print("== density below, a gap at the very bottom")
    between = density_witness(Graph(2, ((0, 1),)), k3, spec.budget)
    print(f"  strictly between K2 and K3: {between.vertex_count} vertices")
    try:
        density_witness(Graph(1, ()), Graph(2, ((0, 1),)), spec.budget)
    except GapError as exc:
        print(f"  K1..K2 rejected: {exc}")
    return EXIT_OK


_PATH_ARGS = ("source", "target", "first", "second", "graph", "poset",
              "embedding", "lower_bound", "upper_bound", "lower", "upper",
              "gadget")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--timeout-secs", type=float, default=None,
                        help="solver budget per operation; overrides "
                             f"{_ENV_TIMEOUT} (default 300)")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized corpora (current commands"
                             " are deterministic)")
    parser.add_argument("--output", default=None, metavar="PATH",
                        help="write the payload here instead of stdout")
    parser.add_argument("--format", choices=("json", "dot"), default="json",
                        help="payload format for graph outputs")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homlab",
        description="a laboratory for the homomorphism order on finite graphs")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("hom", help="find a homomorphism or prove there is none")
    p.add_argument("source")
    p.add_argument("target")
    p.set_defaults(run=_cmd_hom)

    p = sub.add_parser("compare", help="order relation between two graphs")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(run=_cmd_compare)

    p = sub.add_parser("core", help="the core of a graph")
    p.add_argument("graph")
    p.set_defaults(run=_cmd_core)

    p = sub.add_parser("rigid", help="does only the identity map the graph to itself")
    p.add_argument("graph")
    p.set_defaults(run=_cmd_rigid)

    p = sub.add_parser("analyze", help="connectivity, bipartiteness, girth, odd girth")
    p.add_argument("graph")
    p.set_defaults(run=_cmd_analyze)

    p = sub.add_parser("path-threshold",
                       help="path length past which endpoint images are free")
    p.add_argument("graph")
    p.set_defaults(run=_cmd_path_threshold)

    p = sub.add_parser("embed-poset",
                       help="odd sets and directed-cycle families for a poset")
    p.add_argument("poset")
    p.set_defaults(run=_cmd_embed_poset)

    p = sub.add_parser("build", help="run one verified construction")
    p.set_defaults(run=_cmd_build)
    what = p.add_subparsers(dest="what", required=True)
    b = what.add_parser("indicator", help="indicator gadget for odd cycle length l")
    b.add_argument("--l", type=int, required=True)
    b = what.add_parser("hp", help="one cycle block over the interval")
    b.add_argument("--p", type=int, required=True, help="odd cycle-length multiplier")
    b = what.add_parser("ha", help="a block family over the interval")
    b.add_argument("--members", required=True, help="comma-separated odd integers")
    b = what.add_parser("gadget", help="rigid two-block interval gadget")
    b = what.add_parser("phi", help="arc substitution of a digraph")
    b.add_argument("--graph", required=True, metavar="D.json")
    b.add_argument("--gadget", default=None, metavar="GADGET.json")
    for name, inner in what.choices.items():
        if name in ("hp", "ha"):
            inner.add_argument("--l", type=int, default=None)
        if name != "indicator":
            inner.add_argument("--lower", default=None, metavar="G1.json",
                               help="interval lower bound (default: C5)")
            inner.add_argument("--upper", default=None, metavar="G2.json",
                               help="interval upper bound (default: K3)")
        _add_common(inner)

    p = sub.add_parser("embed-interval",
                       help="embed a poset strictly between two graphs")
    p.add_argument("poset")
    p.add_argument("lower_bound")
    p.add_argument("upper_bound")
    p.add_argument("--strategy", choices=("phi", "ha"), default="phi")
    p.set_defaults(run=_cmd_embed_interval)

    p = sub.add_parser("verify", help="re-verify a stored embedding")
    p.add_argument("embedding")
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("demo", help="the C5..K3 pipeline end to end")
    p.set_defaults(run=_cmd_demo)

    for name, sp in sub.choices.items():
        if name != "build":
            _add_common(sp)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        spec = CommandSpec(
            subcommand=args.cmd,
            inputs=tuple(value for name in _PATH_ARGS
                         for value in [getattr(args, name, None)]
                         if isinstance(value, str)),
            output=args.output,
            budget=_resolve_budget(args.timeout_secs),
            seed=args.seed,
            format=args.format,
        )
        return args.run(args, spec)
    except GapError as exc:
        print(f"NEGATIVE: {exc}")
        return EXIT_NEGATIVE
    except ConstructionRejectedError as exc:
        print(f"REJECTED: {exc}")
        return EXIT_NEGATIVE
    except BudgetExceededError as exc:
        print(f"error: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (InvalidParameterError, PreconditionError, StreamExhaustedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except HomlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
