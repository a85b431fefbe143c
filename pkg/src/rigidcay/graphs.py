"""Finite simple graphs, Cayley graphs and cartesian products."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, NamedTuple, Sequence

import numpy as np

from .errors import InvalidGenerator, InvalidInput, InvalidParameter
from .groups import FiniteGroup, GeneratorSet, is_generating
from .unionfind import UnionFind

Edge = tuple[int, int]

FIRST = "first"
SECOND = "second"


@dataclass(frozen=True, eq=False)
class SimpleGraph:
    """Undirected loopless graph on ``range(vertex_count)``.

    ``edges`` is sorted and canonical (u < v). ``edge_origin`` is only set on
    cartesian products and runs parallel to ``edges``.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    labels: dict[int, str] | None = None
    group: FiniteGroup | None = None
    generators: frozenset | None = None
    edge_origin: tuple[str, ...] | None = None
    generating: bool | None = None
    name: str | None = field(default=None)

    @classmethod
    def build(cls, vertex_count: int, edges: Iterable[Sequence[int]], origins: Sequence[str] | None = None,
              **kwargs) -> "SimpleGraph":
        if vertex_count < 0:
            raise InvalidInput(f"negative vertex count {vertex_count}")
        seen: dict[Edge, str | None] = {}
        edges = list(edges)
        if origins is not None and len(origins) != len(edges):
            raise InvalidInput("edge origin tags do not match the edge list")
        for k, e in enumerate(edges):
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise InvalidInput(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InvalidInput(f"edge ({u},{v}) references a vertex outside [0, {vertex_count})")
            key = (u, v) if u < v else (v, u)
            tag = origins[k] if origins is not None else None
            if key in seen and seen[key] != tag:
                raise InvalidInput(f"edge {key} tagged with two different origins")
            seen[key] = tag
        keys = sorted(seen)
        tags = tuple(seen[k] for k in keys) if origins is not None else None
        return cls(vertex_count, tuple(keys), edge_origin=tags, **kwargs)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def descriptor(self) -> str | None:
        return self.group.descriptor if self.group is not None else None

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_index

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        return components(self).component_count == 1

    def is_bipartite(self) -> bool:
        side = [-1] * self.vertex_count
        for start in range(self.vertex_count):
            if side[start] >= 0:
                continue
            side[start] = 0
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if side[w] < 0:
                        side[w] = 1 - side[u]
                        queue.append(w)
                    elif side[w] == side[u]:
                        return False
        return True

    def same_edges(self, other: "SimpleGraph") -> bool:
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.same_edges(other) and self.edge_origin == other.edge_origin

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return f"SimpleGraph(|V|={self.vertex_count}, |E|={self.edge_count})"


class ComponentPartition(NamedTuple):
    component_of: tuple[int, ...]
    component_count: int

    def members(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.component_count)]
        for v, c in enumerate(self.component_of):
            out[c].append(v)
        return out


class DegreeProfile(NamedTuple):
    is_regular: bool
    degrees: Counter


def components(graph: SimpleGraph,
               edge_filter: Callable[[Edge], bool] | Sequence[bool] | None = None) -> ComponentPartition:
    """Connected components of the subgraph keeping the filtered edges.

    ``edge_filter`` is either a predicate on edges or a boolean mask aligned
    with ``graph.edges``; ``None`` keeps every edge.
    """
    uf = UnionFind(graph.vertex_count)
    if edge_filter is None:
        keep = [True] * graph.edge_count
    elif callable(edge_filter):
        keep = [bool(edge_filter(e)) for e in graph.edges]
    else:
        keep = list(edge_filter)
        if len(keep) != graph.edge_count:
            raise InvalidInput("edge mask length differs from edge count")
    for (u, v), k in zip(graph.edges, keep):
        if k:
            uf.union(u, v)
    labels = uf.labels()
    return ComponentPartition(tuple(labels), uf.groups)


def degree_profile(graph: SimpleGraph) -> DegreeProfile:
    degrees = Counter(graph.degree(v) for v in range(graph.vertex_count))
    return DegreeProfile(len(degrees) <= 1, degrees)


# -- constructions -----------------------------------------------------------

def cayley_graph(gens: GeneratorSet) -> SimpleGraph:
    """Undirected Cayley graph with an edge {x, s*x} for each x and s in ``gens``."""
    group = gens.group
    if group.identity in gens.elements:
        raise InvalidGenerator("identity element in generating set")
    if not gens.is_symmetric:
        missing = sorted(g for g in gens.elements if group.invert(g) not in gens.elements)
        raise InvalidGenerator(f"generating set is not symmetric; inverses missing for {missing}")
    n = group.order
    xs = np.arange(n, dtype=np.int64)
    codes = []
    for s in sorted(gens.elements):
        ys = group.left_row(s)
        lo, hi = np.minimum(xs, ys), np.maximum(xs, ys)
        codes.append(lo * n + hi)
    if codes:
        uniq = np.unique(np.concatenate(codes))
        edges = [(int(c // n), int(c % n)) for c in uniq]
    else:
        edges = []
    labels = {v: group.label(v) for v in range(n)}
    return SimpleGraph(n, tuple(edges), labels=labels, group=group,
                       generators=frozenset(gens.elements), generating=is_generating(gens))


def complete_graph(n: int) -> SimpleGraph:
    if n < 1:
        raise InvalidParameter(f"complete graph needs n >= 1, got {n}")
    return SimpleGraph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)), name=f"K{n}")


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise InvalidParameter(f"cycle graph needs n >= 3, got {n}")
    return SimpleGraph.build(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def path_graph(n: int) -> SimpleGraph:
    if n < 1:
        raise InvalidParameter(f"path graph needs n >= 1, got {n}")
    return SimpleGraph(n, tuple((i, i + 1) for i in range(n - 1)), name=f"P{n}")


def cartesian_product(g1: SimpleGraph, g2: SimpleGraph) -> SimpleGraph:
    """Box product; vertex (a, b) becomes ``a * |V2| + b``.

    Edges copied from ``g1`` are tagged "first", those from ``g2`` "second".
    """
    n2 = g2.vertex_count
    edges: list[Edge] = []
    origins: list[str] = []
    for a in range(g1.vertex_count):
        for u, v in g2.edges:
            edges.append((a * n2 + u, a * n2 + v))
            origins.append(SECOND)
    for u, v in g1.edges:
        for b in range(n2):
            edges.append((u * n2 + b, v * n2 + b))
            origins.append(FIRST)
    labels = None
    if g1.labels is not None and g2.labels is not None:
        labels = {a * n2 + b: f"({g1.labels[a]},{g2.labels[b]})"
                  for a in range(g1.vertex_count) for b in range(n2)}
    return SimpleGraph.build(g1.vertex_count * n2, edges, origins=origins, labels=labels)

