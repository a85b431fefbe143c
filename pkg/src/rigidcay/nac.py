"""Red/blue edge colorings and the NAC / good-NAC checks."""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable

from .errors import AmbiguousColoring, InvalidInput, InvalidPartition
from .graphs import FIRST, Edge, SimpleGraph, components


class Color(IntEnum):
    RED = 0
    BLUE = 1


@dataclass(frozen=True)
class EdgeColoring:
    """Total two-coloring; ``blue[i]`` is the color of ``graph.edges[i]``."""

    graph: SimpleGraph
    blue: tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "blue", tuple(bool(b) for b in self.blue))
        if len(self.blue) != self.graph.edge_count:
            raise InvalidInput(f"coloring has {len(self.blue)} entries for {self.graph.edge_count} edges")

    @classmethod
    def from_edges(cls, graph: SimpleGraph, red: Iterable[Edge], blue: Iterable[Edge]) -> "EdgeColoring":
        colors: dict[int, bool] = {}
        for is_blue, edges in ((False, red), (True, blue)):
            for u, v in edges:
                key = (min(u, v), max(u, v))
                idx = graph.edge_index.get(key)
                if idx is None:
                    raise InvalidInput(f"colored edge {key} is not an edge of the graph")
                if idx in colors and colors[idx] != is_blue:
                    raise InvalidInput(f"edge {key} is colored both red and blue")
                colors[idx] = is_blue
        if len(colors) != graph.edge_count:
            missing = [graph.edges[i] for i in range(graph.edge_count) if i not in colors]
            raise InvalidInput(f"coloring is not total; uncolored edges {missing[:5]}")
        return cls(graph, tuple(colors[i] for i in range(graph.edge_count)))

    def color_of(self, edge: Edge) -> Color:
        u, v = edge
        return Color(self.blue[self.graph.edge_index[(min(u, v), max(u, v))]])

    @property
    def red_edges(self) -> list[Edge]:
        return [e for e, b in zip(self.graph.edges, self.blue) if not b]

    @property
    def blue_edges(self) -> list[Edge]:
        return [e for e, b in zip(self.graph.edges, self.blue) if b]

    def swap(self) -> "EdgeColoring":
        return EdgeColoring(self.graph, tuple(not b for b in self.blue))

    def red_components(self):
        return components(self.graph, [not b for b in self.blue])

    def blue_components(self):
        return components(self.graph, self.blue)


@dataclass(frozen=True)
class NacVerdict:
    is_surjective: bool
    is_nac: bool
    is_good: bool
    offending_edge: Edge | None = None
    witness_pair: tuple[int, int] | None = None

    def as_dict(self) -> dict:
        return {
            "is_surjective": self.is_surjective,
            "is_nac": self.is_nac,
            "is_good": self.is_good,
            "offending_edge": list(self.offending_edge) if self.offending_edge else None,
            "witness_pair": list(self.witness_pair) if self.witness_pair else None,
        }


def _verdict(coloring: EdgeColoring) -> NacVerdict:
    graph = coloring.graph
    if graph.edge_count == 0:
        raise InvalidInput("NAC checks need a graph with at least one edge")
    red = coloring.red_components().component_of
    blue = coloring.blue_components().component_of
    surjective = any(coloring.blue) and not all(coloring.blue)

    # a blue edge inside a red component closes an almost-red cycle, and vice versa
    offending = None
    for (u, v), b in zip(graph.edges, coloring.blue):
        same = red[u] == red[v] if b else blue[u] == blue[v]
        if same:
            offending = (u, v)
            break

    witness = None
    first_seen: dict[tuple[int, int], int] = {}
    for v in range(graph.vertex_count):
        key = (red[v], blue[v])
        if key in first_seen:
            witness = (first_seen[key], v)
            break
        first_seen[key] = v

    is_nac = surjective and offending is None
    return NacVerdict(surjective, is_nac, is_nac and witness is None, offending, witness)


def is_nac(coloring: EdgeColoring) -> NacVerdict:
    """Full verdict for ``coloring``; ``.is_nac`` answers the NAC question."""
    return _verdict(coloring)


def is_good_nac(coloring: EdgeColoring) -> NacVerdict:
    """Full verdict for ``coloring``; ``.is_good`` answers the good-NAC question.

    Goodness means every (red component, blue component) pair shares at most
    one vertex. When it fails, ``witness_pair`` holds two vertices sharing both.
    """
    return _verdict(coloring)


def _identity_generators(graph: SimpleGraph) -> frozenset:
    if graph.generators is not None:
        return graph.generators
    # in a Cayley graph the neighbours of the identity are exactly the generators
    return frozenset(graph.adjacency[graph.group.identity])


def generator_class_coloring(graph: SimpleGraph, blue_part: Iterable[int],
                             red_part: Iterable[int] | None = None) -> EdgeColoring:
    """Color Cayley-graph edge {x, s*x} blue iff s lies in the blue class.

    The blue class is ``blue_part`` closed under inverses. The red class is
    the remaining generators, or the inverse closure of ``red_part``.
    """
    group = graph.group
    if group is None:
        raise InvalidInput("graph carries no group; generator classes are undefined")
    gens = _identity_generators(graph)
    blue_sym = {int(s) for s in blue_part}
    blue_sym |= {group.invert(s) for s in blue_sym}
    if not blue_sym:
        raise InvalidPartition("blue class is empty")
    if not blue_sym <= gens:
        raise InvalidPartition(f"blue class contains non-generators {sorted(blue_sym - gens)}")
    if red_part is None:
        red_sym = set(gens) - blue_sym
    else:
        red_sym = {int(s) for s in red_part}
        red_sym |= {group.invert(s) for s in red_sym}
        clash = red_sym & blue_sym
        if clash:
            raise AmbiguousColoring(f"generators {sorted(clash)} fall in both classes")
        if blue_sym | red_sym != gens:
            raise InvalidPartition("blue and red classes do not cover the generating set")
    if not red_sym:
        raise InvalidPartition("blue class covers every generator; no red edges remain")

    inverse = {}
    blue = []
    for u, v in graph.edges:
        if u not in inverse:
            inverse[u] = group.invert(u)
        blue.append(group.multiply(v, inverse[u]) in blue_sym)
    return EdgeColoring(graph, tuple(blue))


def product_coloring(product: SimpleGraph) -> EdgeColoring:
    """First-factor edges red, second-factor edges blue."""
    if product.edge_origin is None:
        raise InvalidInput("graph has no product provenance tags")
    return EdgeColoring(product, tuple(tag != FIRST for tag in product.edge_origin))
