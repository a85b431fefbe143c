"""Disjoint-set forest with an undo trail.

Union by size, no path compression, so every union can be rolled back in
O(1) by popping the trail. ``find`` is O(log n).
"""

from __future__ import annotations


class UnionFind:
    def __init__(self, count: int):
        self.parent = list(range(count))
        self.size = [1] * count
        self.groups = count
        self._trail: list[int] = []

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            x = parent[x]
        return x

    def same(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of ``a`` and ``b``; False if already merged.

        Every call pushes exactly one trail entry (-1 for a no-op) so that
        callers can undo in lockstep with their own decisions.
        """
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            self._trail.append(-1)
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.groups -= 1
        self._trail.append(rb)
        return True

    def undo(self) -> None:
        rb = self._trail.pop()
        if rb < 0:
            return
        ra = self.parent[rb]
        self.parent[rb] = rb
        self.size[ra] -= self.size[rb]
        self.groups += 1

    def labels(self) -> list[int]:
        """Dense component index per element, numbered by first appearance."""
        index: dict[int, int] = {}
        out = []
        for x in range(len(self.parent)):
            r = self.find(x)
            if r not in index:
                index[r] = len(index)
            out.append(index[r])
        return out
