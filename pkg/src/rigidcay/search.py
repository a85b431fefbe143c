"""Backtracking search over red/blue edge colorings for NAC-colorings.

The first edge in the search order is always red: swapping colors maps NAC
colorings to NAC colorings (and good ones to good ones), so the other half
of the space is recovered by swapping rather than searched.
"""

from __future__ import annotations

import heapq
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import CapacityExceeded, InvalidInput, InvalidParameter
from .graphs import SimpleGraph
from .nac import EdgeColoring
from .unionfind import UnionFind

MODES = ("first-any", "first-good", "count-all", "enumerate-all")
DEFAULT_BUDGET = 10**7
MAX_EXHAUSTIVE_EDGES = 30

RED, BLUE = 0, 1


@dataclass
class SearchResult:
    mode: str
    colorings: list[EdgeColoring] = field(default_factory=list)
    count: int = 0
    nodes: int = 0
    partial: bool = False

    @property
    def found(self) -> bool:
        return self.count > 0

    def as_dict(self) -> dict:
        return {"mode": self.mode, "count": self.count, "nodes": self.nodes, "partial": self.partial}


def fill_in_order(graph: SimpleGraph) -> list[int]:
    """Edge order that prefers edges whose endpoints are already touched.

    Starting from the lowest edge, repeatedly take the edge with the most
    endpoints among vertices already covered, ties broken by edge index.
    """
    m = graph.edge_count
    if m == 0:
        return []
    incident: list[list[int]] = [[] for _ in range(graph.vertex_count)]
    for i, (u, v) in enumerate(graph.edges):
        incident[u].append(i)
        incident[v].append(i)
    score = [0] * m
    touched = [False] * graph.vertex_count
    done = [False] * m
    heap = [(0, i) for i in range(m)]
    heapq.heapify(heap)
    order = []
    while heap:
        neg, i = heapq.heappop(heap)
        if done[i] or -neg != score[i]:
            continue
        done[i] = True
        order.append(i)
        for w in graph.edges[i]:
            if not touched[w]:
                touched[w] = True
                for j in incident[w]:
                    if not done[j]:
                        score[j] += 1
                        heapq.heappush(heap, (-score[j], j))
    return order


class _Searcher:
    def __init__(self, graph: SimpleGraph, order: list[int], mode: str, budget: int):
        self.graph = graph
        self.order = order
        self.mode = mode
        self.budget = budget
        self.prune_good = mode == "first-good"
        self.eu = [u for u, _ in graph.edges]
        self.ev = [v for _, v in graph.edges]
        self.ufs = (UnionFind(graph.vertex_count), UnionFind(graph.vertex_count))
        self.colored: tuple[list[int], list[int]] = ([], [])
        self.colors = [-1] * graph.edge_count
        self.nodes = 0

    def assign(self, e: int, c: int) -> bool:
        u, v = self.eu[e], self.ev[e]
        own, other = self.ufs[c], self.ufs[1 - c]
        # an edge whose endpoints the other color already joins closes an almost cycle
        if other.same(u, v):
            return False
        if own.union(u, v):
            for f in self.colored[1 - c]:
                if own.same(self.eu[f], self.ev[f]):
                    own.undo()
                    return False
            if self.prune_good and not self._good_so_far():
                own.undo()
                return False
        self.colored[c].append(e)
        self.colors[e] = c
        return True

    def unassign(self, e: int) -> None:
        c = self.colors[e]
        self.colors[e] = -1
        self.colored[c].pop()
        self.ufs[c].undo()

    def _good_so_far(self) -> bool:
        red, blue = self.ufs
        keys = {(red.find(x), blue.find(x)) for x in range(self.graph.vertex_count)}
        return len(keys) == self.graph.vertex_count

    def _coloring(self) -> EdgeColoring:
        return EdgeColoring(self.graph, tuple(c == BLUE for c in self.colors))

    def run(self, prefix: tuple[int, ...] = (), stop_depth: int | None = None) -> SearchResult:
        """Depth-first search below a fixed color prefix of the edge order.

        With ``stop_depth`` set, the consistent prefixes of that length are
        collected (as colorings of the prefix) instead of full colorings.
        """
        result = SearchResult(self.mode)
        order = self.order
        for d, c in enumerate(prefix):
            if not self.assign(order[d], c):
                for k in range(d - 1, -1, -1):
                    self.unassign(order[k])
                return result
        m = len(order) if stop_depth is None else stop_depth
        base = len(prefix)
        pos = [0] * (m + 1)
        prefixes: list[tuple[int, ...]] = []
        d = base
        while d >= base:
            if d == m:
                if stop_depth is not None:
                    prefixes.append(tuple(self.colors[order[k]] for k in range(m)))
                elif self.colored[BLUE]:
                    result.count += 1
                    if self.mode != "count-all":
                        result.colorings.append(self._coloring())
                    if self.mode in ("first-any", "first-good"):
                        break
                d -= 1
                if d >= base:
                    self.unassign(order[d])
                continue
            options = (RED,) if d == 0 else (RED, BLUE)
            if pos[d] >= len(options):
                pos[d] = 0
                d -= 1
                if d >= base:
                    self.unassign(order[d])
                continue
            c = options[pos[d]]
            pos[d] += 1
            self.nodes += 1
            if self.nodes > self.budget:
                result.partial = True
                break
            if self.assign(order[d], c):
                d += 1
        # unwind whatever is still assigned
        for e in [e for e in order if self.colors[e] >= 0][::-1]:
            self.unassign(e)
        result.nodes = self.nodes
        if stop_depth is not None:
            result.colorings = prefixes  # type: ignore[assignment]
        return result


def _run_task(args):
    graph, order, mode, budget, prefix = args
    res = _Searcher(graph, order, mode, budget).run(prefix)
    return res.count, [c.blue for c in res.colorings], res.nodes, res.partial


def search_nac(graph: SimpleGraph, mode: str = "first-any", budget: int = DEFAULT_BUDGET,
               workers: int = 1, split_depth: int | None = None,
               max_edges: int = MAX_EXHAUSTIVE_EDGES) -> SearchResult:
    """Search the colorings of ``graph`` for NAC-colorings.

    ``count-all`` reports the number of NAC-colorings among all 2^|E| - 2
    surjective colorings; ``enumerate-all`` lists each of them (a coloring is
    followed by its swap). ``first-any`` / ``first-good`` stop at the first
    NAC / good NAC coloring. ``budget`` bounds the number of search nodes; a
    result that ran out of budget has ``partial`` set.

    With ``workers > 1`` the subtrees below the first ``split_depth`` edges
    are searched in separate processes, each with its own budget.
    """
    if mode not in MODES:
        raise InvalidParameter(f"unknown search mode {mode!r}; expected one of {MODES}")
    if graph.edge_count == 0:
        raise InvalidInput("cannot search colorings of an edgeless graph")
    if mode in ("count-all", "enumerate-all") and graph.edge_count > max_edges:
        raise CapacityExceeded(f"{graph.edge_count} edges exceed the exhaustive cap of {max_edges}")
    order = fill_in_order(graph)

    if workers <= 1:
        result = _Searcher(graph, order, mode, budget).run()
    else:
        depth = min(split_depth or max(1, min(graph.edge_count - 1, (4 * workers).bit_length() + 1)),
                    graph.edge_count)
        seed = _Searcher(graph, order, mode, budget).run(stop_depth=depth)
        prefixes = seed.colorings
        tasks = [(graph, order, mode, budget, p) for p in prefixes]
        result = SearchResult(mode, nodes=seed.nodes, partial=seed.partial)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for count, blues, nodes, partial in pool.map(_run_task, tasks):
                result.nodes += nodes
                result.partial |= partial
                if mode in ("first-any", "first-good"):
                    if count and not result.count:
                        result.count = 1
                        result.colorings = [EdgeColoring(graph, blues[0])]
                else:
                    result.count += count
                    result.colorings.extend(EdgeColoring(graph, b) for b in blues)

    if mode in ("count-all", "enumerate-all"):
        result.count *= 2
        if mode == "enumerate-all":
            result.colorings = [c for col in result.colorings for c in (col, col.swap())]
    return result
