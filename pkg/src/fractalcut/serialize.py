"""Serialization: canonical JSON round-trips, DOT and DIMACS exports.

The JSON instance schema is the exchange format used by the CLI:

    {"problem": "lbec"|"mded"|"dsct", "directed": bool, "n": int,
     "edges": [[u, v], ...], "s": int?, "t": int?, "k": int, "ell": int}

with an optional parallel "costs" array when the instance carries non-unit
deletion costs (weighted composer output).  Plain graphs and fractals use a
"type"-tagged schema documented in the README.  parse() inverts to_json()
for every canonical form; DOT and DIMACS are exports only.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .fractal import TFractal, build_fractal
from .graph import Graph
from .solvers import ProblemInstance

_DOT_PALETTE = ("black", "blue", "forestgreen", "orange", "magenta",
                "red", "teal", "purple", "brown", "gray40", "olive")


def graph_to_json_obj(g: Graph) -> dict:
    obj = {
        "type": "graph",
        "directed": g.directed,
        "n": g.n,
        "edges": [[e.u, e.v, e.cost, e.length] for e in g.edges],
    }
    if g.labels:
        obj["labels"] = {str(v): name for v, name in sorted(g.labels.items())}
    return obj


def instance_to_json_obj(inst: ProblemInstance) -> dict:
    obj = {
        "problem": inst.kind,
        "directed": inst.graph.directed,
        "n": inst.graph.n,
        "edges": [[e.u, e.v] for e in inst.graph.edges],
        "k": inst.k,
        "ell": inst.ell,
    }
    if inst.s is not None:
        obj["s"] = inst.s
        obj["t"] = inst.t
    if any(e.cost != 1 for e in inst.graph.edges):
        obj["costs"] = [e.cost for e in inst.graph.edges]
    return obj


def fractal_to_json_obj(f: TFractal) -> dict:
    return {
        "type": "fractal",
        "q": f.depth,
        "directed": f.graph.directed,
        "cost": f.edge_cost,
        "sigma": f.sigma,
        "tau": f.tau,
        "n": f.graph.n,
        "edges": [[e.u, e.v] for e in f.graph.edges],
        "boundaries": [list(b) for b in f.boundaries],
    }


def to_json(obj) -> str:
    if isinstance(obj, TFractal):
        payload = fractal_to_json_obj(obj)
    elif isinstance(obj, ProblemInstance):
        payload = instance_to_json_obj(obj)
    elif isinstance(obj, Graph):
        payload = graph_to_json_obj(obj)
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _field(obj: dict, name: str, kinds) -> object:
    if name not in obj:
        raise ParseError(f"missing field {name!r}")
    value = obj[name]
    if not isinstance(value, kinds):
        raise ParseError(f"field {name!r} has the wrong type")
    return value


def _parse_graph_obj(obj: dict) -> Graph:
    directed = _field(obj, "directed", bool)
    n = _field(obj, "n", int)
    raw = _field(obj, "edges", list)
    edges = []
    for i, entry in enumerate(raw):
        if not (isinstance(entry, list) and 2 <= len(entry) <= 4
                and all(isinstance(x, int) for x in entry)):
            raise ParseError(f"edges[{i}] must be [u, v(, cost(, length))]")
        edges.append(tuple(entry))
    labels = None
    if "labels" in obj:
        labels = {}
        for key, name in _field(obj, "labels", dict).items():
            try:
                labels[int(key)] = str(name)
            except ValueError:
                raise ParseError(f"labels key {key!r} is not a vertex id") from None
    try:
        return Graph(directed, n, edges, labels)
    except Exception as exc:
        raise ParseError(f"invalid graph: {exc}") from exc


def _parse_instance_obj(obj: dict) -> ProblemInstance:
    kind = _field(obj, "problem", str)
    directed = _field(obj, "directed", bool)
    n = _field(obj, "n", int)
    raw = _field(obj, "edges", list)
    costs = obj.get("costs")
    if costs is not None and len(costs) != len(raw):
        raise ParseError("costs array must match the edge list")
    edges = []
    for i, entry in enumerate(raw):
        if not (isinstance(entry, list) and len(entry) == 2
                and all(isinstance(x, int) for x in entry)):
            raise ParseError(f"edges[{i}] must be [u, v]")
        cost = costs[i] if costs is not None else 1
        edges.append((entry[0], entry[1], cost, 1))
    try:
        g = Graph(directed, n, edges)
        return ProblemInstance(kind, g, s=obj.get("s"), t=obj.get("t"),
                               k=_field(obj, "k", int),
                               ell=_field(obj, "ell", int))
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(f"invalid instance: {exc}") from exc


def _parse_fractal_obj(obj: dict) -> TFractal:
    q = _field(obj, "q", int)
    directed = _field(obj, "directed", bool)
    cost = _field(obj, "cost", int)
    try:
        f = build_fractal(q, directed=directed, cost=cost)
    except Exception as exc:
        raise ParseError(f"invalid fractal parameters: {exc}") from exc
    if [[e.u, e.v] for e in f.graph.edges] != obj.get("edges"):
        raise ParseError("fractal edge list does not match its parameters")
    return f


def parse(text: str):
    """Inverse of to_json for graphs, instances, and fractals."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise ParseError("top-level JSON value must be an object")
    if obj.get("type") == "fractal":
        return _parse_fractal_obj(obj)
    if obj.get("type") == "graph":
        return _parse_graph_obj(obj)
    if "problem" in obj:
        return _parse_instance_obj(obj)
    raise ParseError("unrecognized document: expected a type tag or a problem field")


# -- exports -----------------------------------------------------------------


def to_dot(g: Graph, roles: dict[int, str] | None = None,
           edge_colors: dict[int, str] | None = None,
           name: str = "g") -> str:
    """DOT export; terminal roles land in a node attribute, one graph per file."""
    roles = roles or {}
    edge_colors = edge_colors or {}
    kind = "digraph" if g.directed else "graph"
    arrow = "->" if g.directed else "--"
    lines = [f"{kind} {name} {{"]
    for v in range(g.n):
        attrs = []
        if v in roles:
            attrs.append(f'role="{roles[v]}"')
        if g.labels and v in g.labels:
            attrs.append(f'label="{g.labels[v]}"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {v}{suffix};")
    for idx, e in enumerate(g.edges):
        attrs = []
        if idx in edge_colors:
            attrs.append(f'color="{edge_colors[idx]}"')
        if e.cost != 1:
            attrs.append(f'weight="{e.cost}"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {e.u} {arrow} {e.v}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def fractal_to_dot(f: TFractal) -> str:
    """DOT export with one color per boundary ring."""
    colors = {}
    for level, boundary in enumerate(f.boundaries):
        for idx in boundary:
            colors[idx] = _DOT_PALETTE[level % len(_DOT_PALETTE)]
    return to_dot(f.graph, roles={f.sigma: "sigma", f.tau: "tau"},
                  edge_colors=colors, name=f"fractal_q{f.depth}")


def instance_to_dot(inst: ProblemInstance) -> str:
    roles = {}
    if inst.s is not None:
        roles = {inst.s: "s", inst.t: "t"}
    return to_dot(inst.graph, roles=roles, name=inst.kind)


def to_dimacs(g: Graph) -> str:
    """DIMACS edge format, 1-indexed; parallel edges repeat their line."""
    lines = [f"p edge {g.n} {len(g.edges)}"]
    for e in g.edges:
        lines.append(f"e {e.u + 1} {e.v + 1}")
    return "\n".join(lines) + "\n"
