"""Canonical JSON and DOT serialization.

Graph files are {"n": int, "directed": bool, "edges": [[u, v], ...],
"labels": {"0": "name", ...}} with the labels object optional. Poset
files are {"elements": [...], "leq": [[x, y], ...]}; reflexive pairs
may be omitted, the closure is recomputed on load. Interval embeddings
and their verification reports round-trip too, so an embedding written
to disk can be re-verified later. Dumps are canonical: the same value
always serializes to the same bytes.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import InvalidParameterError
from .gadgets import GadgetRecipe, PointedGraph
from .graphs import Digraph, Graph
from .intervals import ClaimRecord, IntervalEmbedding, VerificationReport
from .posets import FinitePoset


def graph_to_obj(g: Graph | Digraph) -> dict[str, Any]:
    directed = isinstance(g, Digraph)
    pairs = g.arcs if directed else g.edges
    obj: dict[str, Any] = {
        "n": g.vertex_count,
        "directed": directed,
        "edges": [list(p) for p in sorted(pairs)],
    }
    if g.labels:
        obj["labels"] = {str(v): name for v, name in sorted(g.labels)}
    return obj


def obj_to_graph(obj: Any) -> Graph | Digraph:
    if not isinstance(obj, dict):
        raise InvalidParameterError("graph object must be a JSON object")
    try:
        n = obj["n"]
        directed = obj["directed"]
        edges = obj["edges"]
    except KeyError as missing:
        raise InvalidParameterError(f"graph object lacks key {missing}") from None
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InvalidParameterError("n must be a non-negative integer")
    if not isinstance(directed, bool):
        raise InvalidParameterError("directed must be a boolean")
    pairs = []
    for item in edges:
        if (not isinstance(item, (list, tuple)) or len(item) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)):
            raise InvalidParameterError(f"bad edge entry {item!r}")
        pairs.append((item[0], item[1]))
    labels = tuple((int(k), str(v)) for k, v in sorted(obj.get("labels", {}).items(),
                                                      key=lambda kv: int(kv[0])))
    if directed:
        return Digraph(n, tuple(pairs), labels)
    return Graph(n, tuple(pairs), labels)


def dumps_graph(g: Graph | Digraph) -> str:
    return json.dumps(graph_to_obj(g), indent=2, sort_keys=True) + "\n"


def loads_graph(text: str) -> Graph | Digraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidParameterError(f"not valid JSON: {exc}") from None
    return obj_to_graph(obj)


def poset_to_obj(q: FinitePoset) -> dict[str, Any]:
    strict = sorted((x, y) for x, y in q.relation if x != y)
    return {"elements": list(q.elements), "leq": [list(p) for p in strict]}


def obj_to_poset(obj: Any) -> FinitePoset:
    if not isinstance(obj, dict):
        raise InvalidParameterError("poset object must be a JSON object")
    try:
        elements = obj["elements"]
        leq = obj["leq"]
    except KeyError as missing:
        raise InvalidParameterError(f"poset object lacks key {missing}") from None
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise InvalidParameterError("elements must be a list of strings")
    pairs = []
    for item in leq:
        if (not isinstance(item, (list, tuple)) or len(item) != 2
                or not all(isinstance(x, str) for x in item)):
            raise InvalidParameterError(f"bad leq entry {item!r}")
        pairs.append((item[0], item[1]))
    return FinitePoset(tuple(elements), tuple(pairs))


def dumps_poset(q: FinitePoset) -> str:
    return json.dumps(poset_to_obj(q), indent=2, sort_keys=True) + "\n"


def loads_poset(text: str) -> FinitePoset:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidParameterError(f"not valid JSON: {exc}") from None
    return obj_to_poset(obj)


def pointed_to_obj(p: PointedGraph) -> dict[str, Any]:
    return {"graph": graph_to_obj(p.graph), "a": p.a, "b": p.b}


def obj_to_pointed(obj: Any) -> PointedGraph:
    if not isinstance(obj, dict):
        raise InvalidParameterError("pointed-graph object must be a JSON object")
    try:
        graph = obj["graph"]
        a = obj["a"]
        b = obj["b"]
    except KeyError as missing:
        raise InvalidParameterError(f"pointed-graph object lacks key {missing}") from None
    g = obj_to_graph(graph)
    if isinstance(g, Digraph):
        raise InvalidParameterError("pointed graphs are undirected")
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in (a, b)):
        raise InvalidParameterError("distinguished vertices must be integers")
    return PointedGraph(g, a, b)


def dumps_pointed(p: PointedGraph) -> str:
    return json.dumps(pointed_to_obj(p), indent=2, sort_keys=True) + "\n"


def loads_pointed(text: str) -> PointedGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidParameterError(f"not valid JSON: {exc}") from None
    return obj_to_pointed(obj)


def report_to_obj(r: VerificationReport) -> dict[str, Any]:
    claims = [
        {
            "claim": c.claim,
            "instance": c.instance,
            "verdict": c.verdict,
            "witness": list(c.witness) if c.witness is not None else None,
            "elapsed_secs": c.elapsed_secs,
        }
        for c in r.claims
    ]
    return {"claims": claims, "overall_pass": r.overall_pass}


def obj_to_report(obj: Any) -> VerificationReport:
    if not isinstance(obj, dict) or not isinstance(obj.get("claims"), list):
        raise InvalidParameterError("report object must contain a claims list")
    records = []
    for item in obj["claims"]:
        if not isinstance(item, dict):
            raise InvalidParameterError(f"bad claim entry {item!r}")
        try:
            witness = item.get("witness")
            records.append(ClaimRecord(
                str(item["claim"]),
                str(item["instance"]),
                str(item["verdict"]),
                tuple(witness) if witness is not None else None,
                float(item.get("elapsed_secs", 0.0)),
            ))
        except KeyError as missing:
            raise InvalidParameterError(f"claim entry lacks key {missing}") from None
    return VerificationReport(tuple(records))


def embedding_to_obj(e: IntervalEmbedding) -> dict[str, Any]:
    obj: dict[str, Any] = {
        "poset": poset_to_obj(e.poset),
        "lower": graph_to_obj(e.lower),
        "upper": graph_to_obj(e.upper),
        "strategy": e.strategy,
        "assignment": {x: graph_to_obj(g) for x, g in sorted(e.assignment.items())},
        "gadget": pointed_to_obj(e.gadget) if e.gadget is not None else None,
        "recipe": (
            {"l": e.recipe.l, "attachment": e.recipe.attachment,
             "path_length": e.recipe.path_length}
            if e.recipe is not None else None
        ),
        "report": report_to_obj(e.report) if e.report is not None else None,
    }
    return obj


def obj_to_embedding(obj: Any) -> IntervalEmbedding:
    if not isinstance(obj, dict):
        raise InvalidParameterError("embedding object must be a JSON object")
    try:
        poset = obj_to_poset(obj["poset"])
        lower = obj_to_graph(obj["lower"])
        upper = obj_to_graph(obj["upper"])
        strategy = str(obj["strategy"])
        assignment_obj = obj["assignment"]
    except KeyError as missing:
        raise InvalidParameterError(f"embedding object lacks key {missing}") from None
    if isinstance(lower, Digraph) or isinstance(upper, Digraph):
        raise InvalidParameterError("interval bounds are undirected")
    if not isinstance(assignment_obj, dict):
        raise InvalidParameterError("assignment must be an object keyed by element")
    assignment = {}
    for x, graph_obj in assignment_obj.items():
        g = obj_to_graph(graph_obj)
        if isinstance(g, Digraph):
            raise InvalidParameterError("assigned graphs are undirected")
        assignment[str(x)] = g
    gadget_obj = obj.get("gadget")
    recipe_obj = obj.get("recipe")
    if recipe_obj is not None and not isinstance(recipe_obj, dict):
        raise InvalidParameterError("recipe must be an object")
    try:
        recipe = (GadgetRecipe(recipe_obj["l"], recipe_obj["attachment"],
                               recipe_obj["path_length"])
                  if recipe_obj is not None else None)
    except KeyError as missing:
        raise InvalidParameterError(f"recipe lacks key {missing}") from None
    report_obj = obj.get("report")
    return IntervalEmbedding(
        poset, lower, upper, strategy, assignment,
        gadget=obj_to_pointed(gadget_obj) if gadget_obj is not None else None,
        recipe=recipe,
        report=obj_to_report(report_obj) if report_obj is not None else None,
    )


def dumps_embedding(e: IntervalEmbedding) -> str:
    return json.dumps(embedding_to_obj(e), indent=2, sort_keys=True) + "\n"


def loads_embedding(text: str) -> IntervalEmbedding:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidParameterError(f"not valid JSON: {exc}") from None
    return obj_to_embedding(obj)


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph | Digraph, name: str = "g") -> str:
    """DOT source with any vertex labels rendered as node annotations."""
    directed = isinstance(g, Digraph)
    kind = "digraph" if directed else "graph"
    dash = "->" if directed else "--"
    named = dict(g.labels)
    lines = [f"{kind} {_dot_quote(name)} {{"]
    for v in range(g.vertex_count):
        text = f"{v}:{named[v]}" if v in named else str(v)
        lines.append(f"  v{v} [label={_dot_quote(text)}];")
    for u, v in (g.arcs if directed else g.edges):
        lines.append(f"  v{u} {dash} v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
