"""Count and sparsity tests for movability, and the combined classifier."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import InvalidInput
from .graphs import Edge, SimpleGraph
from .nac import EdgeColoring
from .search import DEFAULT_BUDGET, search_nac


class Classification(str, Enum):
    RIGID = "Rigid"
    FLEXIBLE = "Flexible"
    MOVABLE = "Movable"
    UNKNOWN = "FlexibleMovabilityUnknown"


def _require_connected(graph: SimpleGraph) -> None:
    if graph.vertex_count < 2:
        raise InvalidInput("need at least two vertices")
    if not graph.is_connected():
        raise InvalidInput("graph is disconnected")


def laman_count_movable(graph: SimpleGraph) -> bool:
    """True iff |E| < 2|V| - 3 on a connected graph."""
    _require_connected(graph)
    return graph.edge_count < 2 * graph.vertex_count - 3


def pebble_game_23(graph: SimpleGraph) -> tuple[int, list[Edge]]:
    """(2,3)-pebble game: size of a maximum (2,3)-sparse edge set and one such set.

    Each vertex starts with two pebbles. An edge is accepted when four pebbles
    can be gathered on its endpoints by reversing directed paths; accepting it
    spends a pebble from its tail.
    """
    n = graph.vertex_count
    if n < 2:
        raise InvalidInput("pebble game needs at least two vertices")
    pebbles = [2] * n
    out: list[set[int]] = [set() for _ in range(n)]

    def fetch(root: int, blocked: int) -> bool:
        parent = {root: -1, blocked: -1}
        stack = [root]
        while stack:
            a = stack.pop()
            for b in out[a]:
                if b in parent:
                    continue
                parent[b] = a
                if pebbles[b] > 0:
                    pebbles[b] -= 1
                    pebbles[root] += 1
                    while b != root:
                        a = parent[b]
                        out[a].discard(b)
                        out[b].add(a)
                        b = a
                    return True
                stack.append(b)
        return False

    independent = []
    for u, v in graph.edges:
        while pebbles[u] < 2 and fetch(u, v):
            pass
        while pebbles[v] < 2 and fetch(v, u):
            pass
        if pebbles[u] + pebbles[v] == 4:
            out[u].add(v)
            pebbles[u] -= 1
            independent.append((u, v))
    return len(independent), independent


def is_laman_graph(graph: SimpleGraph) -> bool:
    n = graph.vertex_count
    if graph.edge_count != 2 * n - 3:
        return False
    return pebble_game_23(graph)[0] == graph.edge_count


@dataclass
class RigidityReport:
    laman_count_movable: bool
    has_spanning_laman: bool
    pebble_rank: int
    nac_exists: bool | None
    good_nac_exists: bool | None
    classification: Classification
    movable: str  # "yes" | "no" | "unknown"
    partial: bool = False
    certificates: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        from .io import coloring_to_json

        certs = {}
        for key, value in self.certificates.items():
            certs[key] = coloring_to_json(value) if isinstance(value, EdgeColoring) else value
        return {
            "classification": self.classification.value,
            "movable": self.movable,
            "laman_count_movable": self.laman_count_movable,
            "has_spanning_laman": self.has_spanning_laman,
            "pebble_rank": self.pebble_rank,
            "nac_exists": self.nac_exists,
            "good_nac_exists": self.good_nac_exists,
            "partial": self.partial,
            "certificates": certs,
        }


def classify(graph: SimpleGraph, search_budget: int = DEFAULT_BUDGET, workers: int = 1) -> RigidityReport:
    """Rigid / Flexible / Movable verdict with certificates.

    Rigid needs an exhaustive search without any NAC-coloring. Movable needs
    a good NAC-coloring, |E| < 2|V| - 3, or a pebble rank below 2|V| - 3.
    A NAC-coloring without any of those leaves movability open: "Flexible"
    when the good-NAC search was exhaustive, "FlexibleMovabilityUnknown"
    when it ran out of budget.
    """
    if graph.edge_count == 0:
        raise InvalidInput("classification needs at least one edge")
    _require_connected(graph)
    n, m = graph.vertex_count, graph.edge_count
    count_ok = m < 2 * n - 3
    rank, _ = pebble_game_23(graph)
    spanning = rank == 2 * n - 3

    certs: dict = {}
    if count_ok:
        certs["laman_count"] = {"edges": m, "bound": 2 * n - 3}
    if not spanning:
        certs["pebble_rank"] = {"rank": rank, "bound": 2 * n - 3}

    good = search_nac(graph, "first-good", search_budget, workers=workers)
    if good.found:
        certs["good_nac"] = good.colorings[0]
        return RigidityReport(count_ok, spanning, rank, True, True, Classification.MOVABLE, "yes",
                              certificates=certs)

    anyres = search_nac(graph, "first-any", search_budget, workers=workers)
    good_known = None if good.partial else False
    if anyres.found:
        certs["nac"] = anyres.colorings[0]
        if count_ok or not spanning:
            cls, movable = Classification.MOVABLE, "yes"
        elif good.partial:
            cls, movable = Classification.UNKNOWN, "unknown"
        else:
            cls, movable = Classification.FLEXIBLE, "unknown"
        return RigidityReport(count_ok, spanning, rank, True, good_known, cls, movable,
                              partial=good.partial, certificates=certs)
    if anyres.partial:
        return RigidityReport(count_ok, spanning, rank, None, good_known, Classification.UNKNOWN,
                              "unknown", partial=True, certificates=certs)
    return RigidityReport(count_ok, spanning, rank, False, False, Classification.RIGID, "no",
                          certificates=certs)
