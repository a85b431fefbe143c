"""Subgroup-intersection conditions for flexible and movable Cayley graphs.

For a generator ``s`` (or a class ``S1``) of ``S``, with the rest of the
generators R = S minus the chosen class and its inverses:

* flexible: <s> meets no element of R, and no element of {s, s^-1} lies in <R>;
* movable:  <s> and <R> meet only in the identity.

The checkers report the offending elements as witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import InvalidGenerator, InvalidParameter, InvalidPartition
from .groups import FiniteGroup, subgroup_closure


@dataclass(frozen=True)
class ConditionReport:
    condition_name: str
    holds: bool
    witnesses: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.holds and not self.witnesses:
            raise AssertionError(f"{self.condition_name}: failing condition without witnesses")

    def as_dict(self, group: FiniteGroup | None = None) -> dict:
        out = {"condition": self.condition_name, "holds": self.holds, "witnesses": list(self.witnesses)}
        if group is not None:
            out["witness_labels"] = [group.label(w) for w in self.witnesses]
        return out


@dataclass(frozen=True)
class PartitionReport:
    flexible: ConditionReport
    movable: ConditionReport

    @property
    def holds(self) -> bool:
        return self.movable.holds

    def as_dict(self, group: FiniteGroup | None = None) -> dict:
        return {"flexible": self.flexible.as_dict(group), "movable": self.movable.as_dict(group)}


def _validate(group: FiniteGroup, S: Iterable[int]) -> set[int]:
    S = {int(g) for g in S}
    for g in S:
        group._check(g)
    if group.identity in S:
        raise InvalidGenerator("identity element in generating set")
    return S


def _split(group: FiniteGroup, S: set[int], s: int) -> tuple[set[int], set[int]]:
    if s not in S:
        raise InvalidParameter(f"{s} is not a member of the generating set")
    pair = {s, group.invert(s)}
    rest = S - pair
    if not rest:
        raise InvalidParameter("no generators remain after removing s and its inverse")
    return pair, rest


def check_flexible_condition(G: FiniteGroup, S: Iterable[int], s: int) -> ConditionReport:
    S = _validate(G, S)
    pair, rest = _split(G, S, s)
    cyc = subgroup_closure(G, {s})
    w = (cyc & rest) | (pair & subgroup_closure(G, rest))
    return ConditionReport("flexible: <s,s^-1> ∩ (S∖{s,s^-1}) = ∅ and {s,s^-1} ∩ <S∖{s,s^-1}> = ∅",
                           not w, tuple(sorted(w)))


def check_movable_condition(G: FiniteGroup, S: Iterable[int], s: int) -> ConditionReport:
    S = _validate(G, S)
    _, rest = _split(G, S, s)
    w = (subgroup_closure(G, {s}) & subgroup_closure(G, rest)) - {G.identity}
    return ConditionReport("movable: <s,s^-1> ∩ <S∖{s,s^-1}> = {e}", not w, tuple(sorted(w)))


def check_partition_condition(G: FiniteGroup, S: Iterable[int], S1: Iterable[int]) -> PartitionReport:
    """Both conditions for a generator class ``S1``; the rest is S ∖ (S1 ∪ S1^-1)."""
    S = _validate(G, S)
    S1 = {int(g) for g in S1}
    if not S1 or not S1 <= S or S1 == S:
        raise InvalidPartition("S1 must be a nonempty proper subset of S")
    sym1 = S1 | {G.invert(g) for g in S1}
    rest = S - sym1
    if not rest:
        raise InvalidPartition("S1 and its inverses cover S")
    cl1 = subgroup_closure(G, S1)
    cl_rest = subgroup_closure(G, rest)
    wf = (cl1 & rest) | (sym1 & cl_rest)
    wm = (cl1 & cl_rest) - {G.identity}
    return PartitionReport(
        ConditionReport("flexible: <S1> ∩ (S∖(S1∪S1^-1)) = ∅ and (S1∪S1^-1) ∩ <S∖(S1∪S1^-1)> = ∅",
                        not wf, tuple(sorted(wf))),
        ConditionReport("movable: <S1> ∩ <S∖(S1∪S1^-1)> = {e}", not wm, tuple(sorted(wm))),
    )


def check_pairwise_trivial(G: FiniteGroup, S: Iterable[int]) -> ConditionReport:
    """Pairwise trivial cyclic intersections; a generator is not compared with its inverse."""
    S = _validate(G, S)
    if len(S) < 2:
        raise InvalidParameter("pairwise condition needs at least two generators")
    cyclic = {g: subgroup_closure(G, {g}) for g in S}
    w: set[int] = set()
    for a, b in combinations(sorted(S), 2):
        if b == G.invert(a):
            continue
        w |= (cyclic[a] & cyclic[b]) - {G.identity}
    return ConditionReport("pairwise: <s_i> ∩ <s_j> = {e} for all i != j", not w, tuple(sorted(w)))
