"""JSON interchange for graphs, colorings and frames; DOT export."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import InvalidInput
from .graphs import SimpleGraph
from .groups import parse_descriptor
from .nac import EdgeColoring


def dumps(obj: Any) -> str:
    """Canonical JSON text: sorted keys, compact separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def parse_json(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{source}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def read_json(path: str | Path) -> Any:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from None
    return parse_json(text, str(path))


def graph_to_json(graph: SimpleGraph) -> dict:
    data: dict[str, Any] = {
        "vertices": graph.vertex_count,
        "edges": [[u, v] for u, v in graph.edges],
        "labels": {str(v): lab for v, lab in (graph.labels or {}).items()},
        "group": graph.descriptor,
    }
    if graph.generators is not None:
        data["generators"] = sorted(graph.generators)
    if graph.edge_origin is not None:
        data["origin"] = list(graph.edge_origin)
    if graph.name:
        data["name"] = graph.name
    return data


def graph_from_json(data: Any, source: str = "<graph>") -> SimpleGraph:
    if not isinstance(data, dict):
        raise InvalidInput(f"{source}: graph JSON must be an object")
    n = data.get("vertices")
    if not isinstance(n, int) or n < 0:
        raise InvalidInput(f"{source}: 'vertices' must be a non-negative integer")
    raw = data.get("edges", [])
    if not isinstance(raw, list):
        raise InvalidInput(f"{source}: 'edges' must be a list")
    edges = []
    for k, e in enumerate(raw):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise InvalidInput(f"{source}: edge #{k} {e!r} is not a pair of integers")
        if e[0] == e[1] or not all(0 <= x < n for x in e):
            raise InvalidInput(f"{source}: edge #{k} {e!r} is a loop or references an unknown vertex")
        edges.append((e[0], e[1]))
    origins = data.get("origin")
    if origins is not None and len(origins) != len(edges):
        raise InvalidInput(f"{source}: 'origin' has {len(origins)} tags for {len(edges)} edges")
    labels = {int(k): str(v) for k, v in (data.get("labels") or {}).items()} or None
    group = parse_descriptor(data["group"]) if data.get("group") else None
    if group is not None and group.order != n:
        raise InvalidInput(f"{source}: group {data['group']} has order {group.order}, graph has {n} vertices")
    gens = frozenset(data["generators"]) if data.get("generators") is not None else None
    return SimpleGraph.build(n, edges, origins=origins, labels=labels, group=group,
                             generators=gens, name=data.get("name"))


def coloring_to_json(coloring: EdgeColoring) -> dict:
    return {"red": [list(e) for e in coloring.red_edges], "blue": [list(e) for e in coloring.blue_edges]}


def coloring_from_json(graph: SimpleGraph, data: Any, source: str = "<coloring>") -> EdgeColoring:
    if not isinstance(data, dict) or not {"red", "blue"} <= set(data):
        raise InvalidInput(f"{source}: coloring JSON needs 'red' and 'blue' edge lists")
    lists = {}
    for key in ("red", "blue"):
        lst = []
        for k, e in enumerate(data[key]):
            if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
                raise InvalidInput(f"{source}: {key} edge #{k} {e!r} is not a pair of integers")
            if not all(0 <= x < graph.vertex_count for x in e):
                raise InvalidInput(f"{source}: {key} edge #{k} {e!r} references an unknown vertex")
            lst.append((e[0], e[1]))
        lists[key] = lst
    try:
        return EdgeColoring.from_edges(graph, lists["red"], lists["blue"])
    except InvalidInput as exc:
        raise InvalidInput(f"{source}: {exc}") from None


def frame_to_json(frame) -> dict:
    return {
        "angle": float(frame.angle),
        "positions": {str(v): [float(x), float(y)] for v, (x, y) in enumerate(frame.positions)},
    }


def load_graph(path: str | Path) -> SimpleGraph:
    return graph_from_json(read_json(path), str(path))


def save_graph(graph: SimpleGraph, path: str | Path) -> None:
    Path(path).write_text(dumps(graph_to_json(graph)))


def load_coloring(graph: SimpleGraph, path: str | Path) -> EdgeColoring:
    return coloring_from_json(graph, read_json(path), str(path))


def to_dot(graph: SimpleGraph, coloring: EdgeColoring | None = None) -> str:
    lines = ["graph G {"]
    for v in range(graph.vertex_count):
        label = (graph.labels or {}).get(v)
        lines.append(f'  {v} [label="{label}"];' if label is not None else f"  {v};")
    for i, (u, v) in enumerate(graph.edges):
        if coloring is None:
            lines.append(f"  {u} -- {v};")
        else:
            lines.append(f"  {u} -- {v} [color={'blue' if coloring.blue[i] else 'red'}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
