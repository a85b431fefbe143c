import numpy as np
import pytest

from rigidcay import (
    CapacityExceeded,
    GeneratorSet,
    InvalidGenerator,
    InvalidParameter,
    direct_product,
    elementary_generators,
    elementary_matrix,
    is_generating,
    make_cyclic,
    make_sl,
    parse_descriptor,
    subgroup_closure,
    symmetric_closure,
    triangular_generators,
)
from rigidcay.groups import sl_order


def _axioms(G):
    e = G.identity
    els = list(G.elements)
    for a in els:
        assert G.multiply(e, a) == a == G.multiply(a, e)
        assert G.multiply(a, G.invert(a)) == e
    rng = np.random.default_rng(1)
    for _ in range(200):
        a, b, c = (int(x) for x in rng.choice(els, 3))
        assert G.multiply(G.multiply(a, b), c) == G.multiply(a, G.multiply(b, c))


@pytest.mark.parametrize("desc", ["cyclic:1", "cyclic:7", "sl:2:2", "sl:2:3", "product:(cyclic:4,cyclic:3)",
                                  "product:(sl:2:2,cyclic:2)"])
def test_group_axioms(desc):
    _axioms(parse_descriptor(desc))


@pytest.mark.parametrize("n,p,order", [(2, 2, 6), (2, 3, 24), (3, 2, 168), (2, 5, 120), (2, 7, 336), (3, 3, 5616)])
def test_sl_order_by_enumeration(n, p, order):
    assert sl_order(n, p) == order
    assert make_sl(n, p).order == order


def test_sl_elements_have_det_one():
    G = make_sl(2, 5)
    for g in G.elements:
        m = G.matrix(g)
        assert (int(m[0, 0]) * int(m[1, 1]) - int(m[0, 1]) * int(m[1, 0])) % 5 == 1


def test_sl_capacity_and_bad_parameters():
    with pytest.raises(CapacityExceeded):
        make_sl(3, 3, capacity=1000)
    with pytest.raises(InvalidParameter):
        make_sl(2, 4)
    with pytest.raises(InvalidParameter):
        make_sl(1, 3)


def test_capacity_env(monkeypatch):
    monkeypatch.setenv("RIGIDCAY_CAPACITY", "10")
    with pytest.raises(CapacityExceeded):
        make_cyclic(11)
    assert make_cyclic(10).order == 10
    monkeypatch.setenv("RIGIDCAY_CAPACITY", "lots")
    with pytest.raises(InvalidParameter):
        make_cyclic(3)


def test_cyclic_parameters():
    with pytest.raises(InvalidParameter):
        make_cyclic(0)
    G = make_cyclic(12)
    assert G.element_order(8) == 3
    assert G.power(5, 3) == 3


def test_product_is_row_major():
    P = direct_product(make_cyclic(4), make_cyclic(3))
    assert P.order == 12
    assert P.pair_id(1, 0) == 3 and P.pair_id(0, 1) == 1
    assert P.split(7) == (2, 1)
    assert P.multiply(P.pair_id(3, 2), P.pair_id(2, 2)) == P.pair_id(1, 1)
    assert P.label(7) == "(2,1)"
    assert P.parse_element("(2,1)") == 7


def test_nary_product_descriptor():
    G = parse_descriptor("product:(cyclic:2,cyclic:3,cyclic:5)")
    assert G.order == 30
    assert parse_descriptor(G.descriptor).order == 30


@pytest.mark.parametrize("text", ["klein", "cyclic:x", "sl:2", "product:(cyclic:2)"])
def test_bad_descriptor(text):
    with pytest.raises(InvalidParameter):
        parse_descriptor(text)


def test_elementary_generators_generate():
    for n, p in [(2, 2), (2, 3), (3, 2), (2, 5)]:
        gens = elementary_generators(n, p)
        assert is_generating(gens)
        assert len(subgroup_closure(gens.group, gens.elements)) == gens.group.order


def test_commutator_of_elementary_matrices():
    G = make_sl(3, 2)
    e12 = G.index(elementary_matrix(3, 2, 1, 2))
    e23 = G.index(elementary_matrix(3, 2, 2, 3))
    e13 = G.index(elementary_matrix(3, 2, 1, 3))
    comm = G.multiply(G.multiply(e12, e23), G.multiply(G.invert(e12), G.invert(e23)))
    assert comm == e13
    assert e13 in subgroup_closure(G, {e12, e23})


def test_elementary_matrix_bounds():
    with pytest.raises(InvalidParameter):
        elementary_matrix(3, 2, 1, 1)
    with pytest.raises(InvalidParameter):
        elementary_matrix(3, 2, 0, 2)


def test_triangular_generators():
    upper = triangular_generators(3, 2, "upper")
    assert len(upper) == 7
    G = make_sl(3, 2)
    assert len(subgroup_closure(G, upper)) == 8
    assert not upper & triangular_generators(3, 2, "lower")
    with pytest.raises(InvalidParameter):
        triangular_generators(2, 3, "diagonal")


def test_closure_of_cyclic_subgroups():
    G = make_cyclic(12)
    assert subgroup_closure(G, {2}) == frozenset(range(0, 12, 2))
    assert subgroup_closure(G, {2}) & subgroup_closure(G, {3}) == {0, 6}
    assert subgroup_closure(G, set()) == {0}


def test_symmetric_closure():
    G = make_cyclic(12)
    assert symmetric_closure(GeneratorSet(G, {2, 3})).elements == {2, 3, 9, 10}
    with pytest.raises(InvalidGenerator):
        symmetric_closure(GeneratorSet(G, {0, 3}))


def test_out_of_range_element():
    G = make_cyclic(5)
    with pytest.raises(InvalidParameter):
        G.multiply(1, 7)
    with pytest.raises(InvalidParameter):
        GeneratorSet(G, {9})


def test_matrix_parse_roundtrip():
    G = make_sl(2, 3)
    for g in G.elements:
        assert G.parse_element(G.label(g)) == g
    assert G.invert(G.parse_element("[[1,1],[0,1]]")) == G.parse_element("[[1,2],[0,1]]")
