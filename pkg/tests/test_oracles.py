"""Self-checks for the brute-force oracles against hand-counted values."""

from itertools import product

from corpus import atlas_connected
from oracles import count_nac_unpruned, max_sparse_exhaustive, max_sparse_greedy, nac_table
from rigidcay import SimpleGraph, complete_graph, cycle_graph


def test_greedy_rank_equals_exhaustive_on_small_graphs():
    for g in atlas_connected(5):
        assert max_sparse_greedy(g) == max_sparse_exhaustive(g)


def test_cycle_counts():
    # on C_n a coloring is NAC iff each color has at least two edges
    for n in range(3, 8):
        assert count_nac_unpruned(cycle_graph(n)) == 2**n - 2 - 2 * n


def test_table_agrees_with_direct_definition_on_a_small_graph():
    g = SimpleGraph.build(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
    idx = g.edge_index
    cyc = [{idx[(0, 1)], idx[(1, 2)], idx[(0, 2)]}, {idx[(0, 2)], idx[(2, 3)], idx[(0, 3)]},
           {idx[(0, 1)], idx[(1, 2)], idx[(2, 3)], idx[(0, 3)]}]
    table = nac_table(g)
    for bits in product([0, 1], repeat=5):
        code = sum(b << i for i, b in enumerate(bits))
        blue = {i for i, b in enumerate(bits) if b}
        surj = 0 < len(blue) < 5
        ok = surj and all(len(c & blue) not in (1, len(c) - 1) for c in cyc)
        assert table[code] == ok


def test_complete_graphs_have_no_nac():
    for n in (3, 4, 5):
        assert count_nac_unpruned(complete_graph(n)) == 0
