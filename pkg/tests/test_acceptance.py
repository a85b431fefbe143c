"""Acceptance gate: one test per criterion, tolerances pinned below."""

from math import gcd, lcm

import numpy as np
import pytest

from corpus import atlas_connected, random_graphs
from oracles import blue_mask, cycle_masks, good_by_paths, max_sparse_greedy, nac_by_cycles, nac_table
from rigidcay import (
    Classification,
    EdgeColoring,
    GeneratorSet,
    abelian_family,
    build_flex,
    cartesian_product,
    cayley_graph,
    check_flexible_condition,
    check_movable_condition,
    classify,
    complete_graph,
    degree_profile,
    dense_abelian_family,
    elementary_generators,
    elementary_matrix,
    generator_class_coloring,
    is_good_nac,
    is_nac,
    make_cyclic,
    make_sl,
    pebble_game_23,
    product_coloring,
    regularity_construction,
    search_nac,
    sl_family,
    subgroup_closure,
    verify_flex,
)
from rigidcay.groups import sl_order

FLEX_SAMPLES = 100
FLEX_TOL = 1e-9
NONCONGRUENCE_MIN = 1e-3
ORACLE_COUNT_MAX_EDGES = 12
SAMPLED_COLORINGS = 40


def cyclic_cayley(n, S):
    G = make_cyclic(n)
    return G, cayley_graph(GeneratorSet(G, set(S) | {(-s) % n for s in S}))


def regular_of(graph):
    prof = degree_profile(graph)
    assert prof.is_regular
    return next(iter(prof.degrees))


@pytest.mark.criterion(1)
def test_criterion_1_z6_golden():
    G, g = cyclic_cayley(6, {2, 3})
    assert (g.vertex_count, g.edge_count, regular_of(g)) == (6, 9, 3)
    rep = check_movable_condition(G, g.generators, 2)
    assert rep.holds
    assert subgroup_closure(G, {2}) & subgroup_closure(G, {3}) == {0}
    c = generator_class_coloring(g, {3})
    assert is_good_nac(c).is_good
    flex = verify_flex(build_flex(g, c), g, FLEX_SAMPLES, FLEX_TOL)
    assert flex.passed


@pytest.mark.criterion(2)
def test_criterion_2_z12_golden():
    G, g = cyclic_cayley(12, {2, 3})
    assert (g.vertex_count, g.edge_count, regular_of(g)) == (12, 24, 4)
    assert g.edge_count > 2 * g.vertex_count - 3
    S = g.generators
    assert check_flexible_condition(G, S, 2).holds
    c = generator_class_coloring(g, {2})
    v = is_good_nac(c)
    assert v.is_nac and not v.is_good
    assert set(v.witness_pair) == {0, 6}
    mv = check_movable_condition(G, S, 2)
    assert not mv.holds and mv.witnesses == (6,)


@pytest.mark.criterion(3)
def test_criterion_3_abelian_families():
    power = abelian_family("power", 3, 2)
    assert (power.graph.vertex_count, power.graph.edge_count, regular_of(power.graph)) == (9, 18, 4)
    crt = abelian_family("crt", [4, 3])
    assert (crt.graph.vertex_count, crt.graph.edge_count, regular_of(crt.graph)) == (12, 24, 4)
    assert set(crt.extras["translated_generators"]) == {9, 3, 4, 8}
    inv = abelian_family("with_involution", [2, 3])
    assert regular_of(inv.graph) == 3
    for inst in (power, crt, inv):
        assert is_good_nac(inst.coloring).is_good


@pytest.mark.criterion(4)
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_criterion_4_dense_family(n):
    inst = dense_abelian_family(n, 1)
    g = inst.graph
    assert (g.vertex_count, g.edge_count, regular_of(g)) == (n * n, n**3 - n**2, 2 * n - 2)
    if n == 4:
        assert (g.vertex_count, g.edge_count, regular_of(g)) == (16, 48, 6)
    prod = cartesian_product(complete_graph(n), complete_graph(n))
    assert g.same_edges(prod)
    assert is_good_nac(product_coloring(prod)).is_good
    assert is_good_nac(inst.coloring).is_good


@pytest.mark.criterion(5)
def test_criterion_5_sl_families():
    for (n, p), order in {(2, 2): 6, (2, 3): 24, (3, 2): 168}.items():
        G = make_sl(n, p)
        assert G.order == order == sl_order(n, p)
        gens = elementary_generators(n, p, group=G)
        assert len(subgroup_closure(G, gens.elements)) == order
    G = make_sl(3, 2)
    e12, e23, e13 = (G.index(elementary_matrix(3, 2, i, j)) for i, j in ((1, 2), (2, 3), (1, 3)))
    assert G.multiply(G.multiply(e12, e23), G.multiply(G.invert(e12), G.invert(e23))) == e13
    inst = sl_family(2, 3)
    g = inst.graph
    assert (g.vertex_count, g.edge_count, regular_of(g)) == (24, 48, 4)
    for n, p in ((2, 2), (2, 3), (3, 2)):
        assert is_good_nac(sl_family(n, p).coloring).is_good
        tri = sl_family(n, p, "triangular")
        assert regular_of(tri.graph) == 2 * (p ** (n * (n - 1) // 2) - 1)
        assert is_good_nac(tri.coloring).is_good


@pytest.mark.criterion(6)
@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_criterion_6_regularity(r):
    inst = regularity_construction(r)
    assert regular_of(inst.graph) == r
    assert inst.condition.holds
    assert is_good_nac(inst.coloring).is_good
    expected_group = "product:(cyclic:2,cyclic:3)" if r == 3 else f"sl:{r // 2 + 1}:2"
    assert inst.graph.descriptor == expected_group


@pytest.mark.criterion(7)
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_criterion_7_rigid_complete(n):
    g = complete_graph(n)
    res = search_nac(g, "count-all")
    assert res.count == 0 and not res.partial
    assert classify(g).classification is Classification.RIGID


def _coloring_sample(g, rng):
    m = g.edge_count
    if m <= ORACLE_COUNT_MAX_EDGES:
        table = nac_table(g)
        nac_codes = np.flatnonzero(table)
        other = np.flatnonzero(~table)
        picks = rng.choice(other, min(len(other), SAMPLED_COLORINGS), replace=False)
        codes = list(nac_codes) + list(picks)
        return [tuple(bool(int(c) >> i & 1) for i in range(m)) for c in codes], int(table.sum())
    blues = [tuple(bool(b) for b in rng.integers(0, 2, m)) for _ in range(SAMPLED_COLORINGS)]
    found = search_nac(g, "enumerate-all", max_edges=64, budget=10**5)
    blues += [c.blue for c in found.colorings[:20]]
    return blues, None


@pytest.mark.criterion(8)
def test_criterion_8_oracle_equivalence():
    rng = np.random.default_rng(8)
    graphs = atlas_connected(6) + random_graphs()
    assert len(graphs) == 142 + 500
    checked = counted = 0
    for g in graphs:
        assert pebble_game_23(g)[0] == max_sparse_greedy(g), g.edges
        blues, oracle_count = _coloring_sample(g, rng)
        if oracle_count is not None:
            assert search_nac(g, "count-all").count == oracle_count, g.edges
            counted += 1
        masks = cycle_masks(g)
        for blue in blues:
            c = EdgeColoring(g, blue)
            v = is_nac(c)
            assert v.is_nac == nac_by_cycles(g.edge_count, masks, blue_mask(blue)), (g.edges, blue)
            if v.is_nac:
                assert is_good_nac(c).is_good == good_by_paths(g, blue), (g.edges, blue)
            checked += 1
    assert counted > 500 and checked > 20000


def _cyclic_movable(n, s, t):
    # <s> = <gcd(s, n)>, and <d1> meets <d2> in <lcm(d1, d2)>
    return lcm(gcd(s, n), gcd(t, n)) % n == 0


def _cyclic_flexible(n, s, t):
    return t % gcd(s, n) != 0 and s % gcd(t, n) != 0


@pytest.mark.criterion(9)
def test_criterion_9_theorem_soundness():
    pairs = checks = counterexamples = 0
    for n in range(3, 31):
        G = make_cyclic(n)
        for a in range(1, n):
            for b in range(a + 1, n):
                if gcd(gcd(a, b), n) != 1:
                    continue
                S = {a, b, (-a) % n, (-b) % n}
                g = cayley_graph(GeneratorSet(G, S))
                for s, t in ((a, b), (b, a)):
                    if not S - {s, (-s) % n}:
                        continue  # {a, b} = {s, -s}: nothing left for the second class
                    pairs += 1
                    v = is_good_nac(generator_class_coloring(g, {s}))
                    movable = check_movable_condition(G, S, s).holds
                    flexible = check_flexible_condition(G, S, s).holds
                    assert movable == _cyclic_movable(n, s, t), (n, S, s)
                    assert flexible == _cyclic_flexible(n, s, t), (n, S, s)
                    if movable:
                        checks += 1
                        counterexamples += not v.is_good
                    if flexible:
                        checks += 1
                        counterexamples += not v.is_nac
    assert pairs > 5000 and checks > 500
    assert counterexamples == 0


def _good_fixtures():
    _, z6 = cyclic_cayley(6, {2, 3})
    out = [("z6", z6, generator_class_coloring(z6, {3}))]
    insts = [abelian_family("power", 3, 2), abelian_family("crt", [4, 3]), abelian_family("with_involution", [2, 3])]
    insts += [dense_abelian_family(n, 1) for n in (2, 3, 4, 5)]
    insts += [sl_family(n, p) for n, p in ((2, 2), (2, 3), (3, 2))]
    insts += [sl_family(n, p, "triangular") for n, p in ((2, 2), (2, 3), (3, 2))]
    insts += [regularity_construction(r) for r in (2, 3, 4, 5)]
    out += [(f"{i.family_name}{i.params}", i.graph, i.coloring) for i in insts]
    return out


@pytest.mark.criterion(10)
def test_criterion_10_flex_numerics():
    fixtures = _good_fixtures()
    assert len(fixtures) == 18
    for name, g, c in fixtures:
        rep = verify_flex(build_flex(g, c), g, FLEX_SAMPLES, FLEX_TOL)
        assert rep.max_length_drift < FLEX_TOL, name
        assert rep.injective is True, name
        assert rep.distance_change_pi_3 > NONCONGRUENCE_MIN, name
        assert rep.passed, name
