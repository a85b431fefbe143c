"""Brute-force reference implementations used to cross-check the library.

These deliberately avoid union-find and the pruned search: NAC is tested by
enumerating every simple cycle, goodness by path queries in each color
class, sparsity by checking every vertex subset.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx
import numpy as np


def to_nx(graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(graph.vertex_count))
    g.add_edges_from(graph.edges)
    return g


def cycle_masks(graph) -> list[int]:
    """Every simple cycle as a bitmask over edge indices."""
    index = graph.edge_index
    masks = []
    for cyc in nx.simple_cycles(to_nx(graph)):
        if len(cyc) < 3:
            continue
        m = 0
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            m |= 1 << index[(min(a, b), max(a, b))]
        masks.append(m)
    return masks


def blue_mask(blue) -> int:
    return sum(1 << i for i, b in enumerate(blue) if b)


def nac_by_cycles(edge_count: int, masks: list[int], blue: int) -> bool:
    """Surjective and no cycle has exactly one edge of either color."""
    full = (1 << edge_count) - 1
    if blue == 0 or blue == full:
        return False
    for m in masks:
        nb = bin(m & blue).count("1")
        if nb == 1 or nb == bin(m).count("1") - 1:
            return False
    return True


def good_by_paths(graph, blue) -> bool:
    """No two distinct vertices are joined by both a red path and a blue path."""
    red_g, blue_g = nx.Graph(), nx.Graph()
    for g in (red_g, blue_g):
        g.add_nodes_from(range(graph.vertex_count))
    for (u, v), b in zip(graph.edges, blue):
        (blue_g if b else red_g).add_edge(u, v)
    for u, v in combinations(range(graph.vertex_count), 2):
        if nx.has_path(red_g, u, v) and nx.has_path(blue_g, u, v):
            return False
    return True


def is_sparse_23(n: int, edges: list[tuple[int, int]]) -> bool:
    """Every vertex subset V' with |V'| >= 2 spans at most 2|V'| - 3 of ``edges``."""
    for mask in range(1, 1 << n):
        k = bin(mask).count("1")
        if k < 2:
            continue
        spanned = sum(1 for u, v in edges if mask >> u & 1 and mask >> v & 1)
        if spanned > 2 * k - 3:
            return False
    return True


def max_sparse_greedy(graph) -> int:
    """Rank of the (2,3)-sparsity matroid by greedy insertion.

    ``spanned[mask]`` counts accepted edges inside vertex subset ``mask``; an
    edge is accepted when no subset containing both endpoints would exceed
    2|V'| - 3.
    """
    n = graph.vertex_count
    masks = np.arange(1 << n)
    sizes = np.bitwise_count(masks.astype(np.uint32)).astype(np.int64)
    spanned = np.zeros(1 << n, dtype=np.int64)
    rank = 0
    for u, v in graph.edges:
        inside = (masks >> u & 1).astype(bool) & (masks >> v & 1).astype(bool)
        if (spanned[inside] + 1 <= 2 * sizes[inside] - 3).all():
            spanned[inside] += 1
            rank += 1
    return rank


def max_sparse_exhaustive(graph) -> int:
    """Largest (2,3)-sparse edge subset by trying subsets from the largest down."""
    edges = list(graph.edges)
    for size in range(len(edges), -1, -1):
        for sub in combinations(edges, size):
            if is_sparse_23(graph.vertex_count, list(sub)):
                return size
    return 0


def nac_table(graph) -> np.ndarray:
    """Boolean NAC verdict for every one of the 2^|E| colorings (bit i = edge i blue)."""
    m = graph.edge_count
    blue = np.arange(1 << m, dtype=np.uint32)
    ok = (blue != 0) & (blue != (1 << m) - 1)
    for mask in cycle_masks(graph):
        nb = np.bitwise_count(blue & np.uint32(mask))
        ok &= (nb != 1) & (nb != bin(mask).count("1") - 1)
    return ok


def count_nac_unpruned(graph) -> int:
    return int(nac_table(graph).sum())
