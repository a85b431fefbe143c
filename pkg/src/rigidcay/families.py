"""Movable Cayley graph families with good NAC certificates.

Every constructor checks the built graph against its closed-form vertex,
edge and degree counts, checks the subgroup-intersection condition for its
color classes, and checks that the attached coloring is a good NAC-coloring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import gcd, prod

from .errors import CapacityExceeded, InvalidParameter, PredictionMismatch
from .graphs import SimpleGraph, cayley_graph, degree_profile
from .groups import (
    FiniteGroup,
    GeneratorSet,
    SpecialLinearGroup,
    direct_product,
    elementary_generators,
    elementary_matrix,
    is_prime,
    make_cyclic,
    make_sl,
    resolve_capacity,
    triangular_generators,
)
from .nac import EdgeColoring, generator_class_coloring, is_good_nac
from .theorems import PartitionReport, check_partition_condition

FAMILY_SL_CAPACITY = 10**4

FAMILY_NAMES = ("abelian-power", "abelian-crt", "abelian-involution", "dense",
                "sl-elementary", "sl-triangular", "sl-product", "regularity")


@dataclass(frozen=True)
class Prediction:
    vertices: int
    edges: int
    regularity: int


@dataclass
class FamilyInstance:
    family_name: str
    graph: SimpleGraph
    coloring: EdgeColoring
    predicted: Prediction
    params: dict = field(default_factory=dict)
    condition: PartitionReport | None = None
    extras: dict = field(default_factory=dict)

    @property
    def actual(self) -> Prediction:
        profile = degree_profile(self.graph)
        degree = next(iter(profile.degrees)) if profile.is_regular and profile.degrees else -1
        return Prediction(self.graph.vertex_count, self.graph.edge_count, degree)

    def as_dict(self) -> dict:
        from .io import coloring_to_json, graph_to_json

        out = {
            "family": self.family_name,
            "params": self.params,
            "predicted": vars(self.predicted),
            "actual": vars(self.actual),
            "graph": graph_to_json(self.graph),
            "coloring": coloring_to_json(self.coloring),
        }
        if self.condition is not None:
            out["condition"] = self.condition.as_dict()
        out.update(self.extras)
        return out


def _finish(name: str, group: FiniteGroup, gens: set[int], blue: set[int], predicted: Prediction,
            params: dict, extras: dict | None = None) -> FamilyInstance:
    gens = set(gens) | {group.invert(g) for g in gens}
    graph = cayley_graph(GeneratorSet(group, gens))
    coloring = generator_class_coloring(graph, blue)
    inst = FamilyInstance(name, graph, coloring, predicted, params, extras=extras or {})
    if inst.actual != predicted:
        raise PredictionMismatch(f"{name} {params}: predicted {predicted}, built {inst.actual}")
    inst.condition = check_partition_condition(group, gens, blue)
    if not inst.condition.holds:
        raise PredictionMismatch(f"{name} {params}: color classes generate subgroups meeting in "
                                 f"{inst.condition.movable.witnesses}")
    if not is_good_nac(coloring).is_good:
        raise PredictionMismatch(f"{name} {params}: attached coloring is not a good NAC-coloring")
    return inst


def _cyclic_product(moduli: list[int], capacity: int | None) -> FiniteGroup:
    cap = resolve_capacity(capacity)
    if prod(moduli) > cap:
        raise CapacityExceeded(f"product of moduli {moduli} exceeds capacity {cap}")
    groups = [make_cyclic(m, cap) for m in moduli]
    return reduce(lambda a, b: direct_product(a, b, cap), groups)


def _mixed_radix(moduli: list[int], comps: list[int]) -> int:
    out = 0
    for m, c in zip(moduli, comps):
        out = out * m + c % m
    return out


def _basis(moduli: list[int]) -> list[int]:
    return [_mixed_radix(moduli, [int(i == j) for j in range(len(moduli))]) for i in range(len(moduli))]


def crt_translate(moduli: list[int], element: int) -> int:
    """Residue mod prod(moduli) of a product-group element (pairwise coprime moduli)."""
    comps = []
    for m in reversed(moduli):
        element, c = divmod(element, m)
        comps.append(c)
    comps.reverse()
    n = prod(moduli)
    x = 0
    for m, c in zip(moduli, comps):
        rest = n // m
        x += c * rest * pow(rest, -1, m)
    return x % n


def _check_coprime(moduli: list[int]) -> None:
    for i in range(len(moduli)):
        for j in range(i + 1, len(moduli)):
            if gcd(moduli[i], moduli[j]) != 1:
                raise InvalidParameter(f"moduli {moduli[i]} and {moduli[j]} are not coprime")


def abelian_family(kind: str, *args, capacity: int | None = None) -> FamilyInstance:
    """Cayley graphs of products of cyclic groups on the standard basis.

    ``abelian_family("power", q, alpha)``       (Z/q)^alpha, 2*alpha-regular, q > 2
    ``abelian_family("crt", [m1, m2, ...])``    Z/m1 x Z/m2 x ..., 2r-regular
    ``abelian_family("with_involution", [2, m1, ...])``  adds a Z/2 factor, 2r+1-regular

    The first basis vector's class is blue, all other generators red.
    """
    if kind == "power":
        q, alpha = args
        if q <= 2:
            raise InvalidParameter(f"power form needs q > 2, got {q}")
        if alpha < 2:
            raise InvalidParameter(f"power form needs alpha >= 2 for two color classes, got {alpha}")
        moduli = [q] * alpha
        regularity = 2 * alpha
        params = {"q": q, "alpha": alpha}
    elif kind == "crt":
        moduli = [int(m) for m in args[0]]
        if len(moduli) < 2:
            raise InvalidParameter("crt form needs at least two moduli")
        _check_coprime(moduli)
        if min(moduli) <= 2:
            raise InvalidParameter("crt moduli must exceed 2; use with_involution for a Z/2 factor")
        regularity = 2 * len(moduli)
        params = {"moduli": moduli}
    elif kind == "with_involution":
        moduli = [int(m) for m in args[0]]
        if len(moduli) < 2 or moduli[0] != 2:
            raise InvalidParameter("with_involution form is [2, m1, ...] with at least one odd modulus")
        _check_coprime(moduli)
        if min(moduli[1:]) <= 2:
            raise InvalidParameter("moduli after the leading 2 must exceed 2")
        regularity = 2 * (len(moduli) - 1) + 1
        params = {"moduli": moduli}
    else:
        raise InvalidParameter(f"unknown abelian family kind {kind!r}")

    group = _cyclic_product(moduli, capacity)
    basis = _basis(moduli)
    gens = set(basis) | {group.invert(b) for b in basis}
    n = group.order
    extras = {}
    if kind != "power":
        extras["translated_generators"] = sorted(crt_translate(moduli, g) for g in gens)
    return _finish(f"abelian-{kind}", group, gens, {basis[0]},
                   Prediction(n, n * regularity // 2, regularity), params, extras)


def dense_abelian_family(n: int, k: int = 1, capacity: int | None = None) -> FamilyInstance:
    """Z/n x Z/n^k with both full coordinate axes as generators."""
    if n < 2 or k < 1:
        raise InvalidParameter(f"dense family needs n >= 2 and k >= 1, got n={n}, k={k}")
    moduli = [n, n**k]
    group = _cyclic_product(moduli, capacity)
    axis1 = {_mixed_radix(moduli, [a, 0]) for a in range(1, n)}
    axis2 = {_mixed_radix(moduli, [0, b]) for b in range(1, n**k)}
    regularity = n + n**k - 2
    vertices = n ** (k + 1)
    return _finish("dense", group, axis1 | axis2, axis1,
                   Prediction(vertices, vertices * regularity // 2, regularity), {"n": n, "k": k})


def _sl_group(n: int, p: int, capacity: int | None) -> SpecialLinearGroup:
    if not is_prime(p):
        raise InvalidParameter(f"{p} is not prime")
    return make_sl(n, p, resolve_capacity(capacity, FAMILY_SL_CAPACITY))


def sl_family(n: int, p: int, variant: str = "elementary", capacity: int | None = None) -> FamilyInstance:
    """SL(n, p) with upper generators blue and lower generators red."""
    group = _sl_group(n, p, capacity)
    if variant == "elementary":
        gens = set(elementary_generators(n, p, group=group).elements)
        upper = {group.index(elementary_matrix(n, p, i, i + 1)) for i in range(1, n)}
        regularity = 2 * (n - 1) if p == 2 else 4 * (n - 1)
    elif variant == "triangular":
        upper = set(triangular_generators(n, p, "upper", group=group))
        gens = upper | triangular_generators(n, p, "lower", group=group)
        regularity = 2 * (p ** (n * (n - 1) // 2) - 1)
    else:
        raise InvalidParameter(f"unknown SL variant {variant!r}")
    N = group.order
    return _finish(f"sl-{variant}", group, gens, upper, Prediction(N, N * regularity // 2, regularity),
                   {"n": n, "p": p, "variant": variant})


def sl_product_family(n: int, p: int, k: int = 1, second_p: int | None = None,
                      capacity: int | None = None) -> FamilyInstance:
    """SL(n, p) x SL(n^k, p') with both full axes as generators.

    This is the cartesian product of the complete graphs on the two factors.
    ``second_p`` defaults to ``p``.
    """
    if n < 2 or k < 1:
        raise InvalidParameter("both factors must be nontrivial (n >= 2, k >= 1)")
    p2 = p if second_p is None else second_p
    cap = resolve_capacity(capacity, FAMILY_SL_CAPACITY)
    g1 = _sl_group(n, p, cap)
    g2 = _sl_group(n**k, p2, cap)
    group = direct_product(g1, g2, cap)
    m1, m2 = g1.order, g2.order
    axis1 = {group.pair_id(a, g2.identity) for a in range(m1) if a != g1.identity}
    axis2 = {group.pair_id(g1.identity, b) for b in range(m2) if b != g2.identity}
    regularity = m1 + m2 - 2
    return _finish("sl-product", group, axis1 | axis2, axis1,
                   Prediction(m1 * m2, m1 * m2 * regularity // 2, regularity),
                   {"n": n, "p": p, "k": k, "second_p": p2})


def regularity_construction(r: int, capacity: int | None = None) -> FamilyInstance:
    """A movable r-regular Cayley graph.

    Even r = 2*rho: SL(rho+1, 2) with the elementary generators (all involutions).
    Odd r = 2*rho+1 >= 5: the same set plus E_{1,3}, kept in the blue class.
    r = 3: Z/2 x Z/3 on its standard basis.
    """
    if r < 2:
        raise InvalidParameter(f"regularity must be >= 2, got {r}")
    if r == 3:
        inst = abelian_family("with_involution", [2, 3], capacity=capacity)
        inst.family_name = "regularity"
        inst.params = {"r": r, "via": "abelian-with_involution"}
        return inst
    rho = r // 2
    n = rho + 1
    group = _sl_group(n, 2, capacity)
    gens = set(elementary_generators(n, 2, group=group).elements)
    upper = {group.index(elementary_matrix(n, 2, i, i + 1)) for i in range(1, n)}
    if r % 2:
        e13 = group.index(elementary_matrix(n, 2, 1, 3))
        gens.add(e13)
        upper.add(e13)
    N = group.order
    return _finish("regularity", group, gens, upper, Prediction(N, N * r // 2, r),
                   {"r": r, "via": f"sl:{n}:2"})
