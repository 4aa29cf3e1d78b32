from itertools import combinations, permutations
from math import comb

import pytest
from hypothesis import given

from gel import graph as G
from gel.canon import are_isomorphic
from gel.graph import Graph, VertexPair, find_copy, find_induced_copy, symmetric_difference_count
from gel.oracles import brute_copy, labeled_graphs

from conftest import graphs


def test_pair_index_matches_graph6_column_order():
    pairs = G.pair_list(5)
    assert [G.pair_index(u, v) for u, v in pairs] == list(range(10))
    assert pairs[:3] == [(0, 1), (0, 2), (1, 2)]
    assert G.pair_index(3, 1) == G.pair_index(1, 3)


def test_vertex_pair_is_ordered():
    assert VertexPair.of(4, 2) == VertexPair(2, 4)
    with pytest.raises(ValueError):
        VertexPair.of(3, 3)


def test_complement_of_k4_is_e4():
    assert G.complete(4).complement() == G.empty(4)


def test_c5_is_self_complementary():
    assert are_isomorphic(G.cycle(5).complement(), G.cycle(5))


@given(graphs(max_n=5))
def test_complement_is_an_involution(g):
    assert g.complement().complement() == g


@given(graphs())
def test_complement_differs_everywhere(g):
    assert symmetric_difference_count(g, g.complement()) == comb(g.n, 2)


def test_symmetric_difference_needs_equal_order():
    with pytest.raises(ValueError):
        symmetric_difference_count(G.complete(3), G.complete(4))


def test_symmetric_difference_examples():
    assert symmetric_difference_count(G.complete(3), G.empty(3)) == 3
    assert symmetric_difference_count(G.path(4), G.path(4)) == 0
    assert symmetric_difference_count(G.path(4), G.cycle(4)) == 1


def test_find_induced_copy_examples():
    m = find_induced_copy(G.cycle(5), G.path(4))
    assert m is not None
    assert find_induced_copy(G.complete(4), G.path(3)) is None
    for n in range(1, 5):
        assert find_induced_copy(G.complete(n), G.complete(1)) is not None


def test_returned_copy_is_a_valid_embedding():
    g, h = G.cycle(6), G.path(4)
    m = find_induced_copy(g, h)
    assert len(set(m.values())) == h.n
    for i, j in combinations(range(h.n), 2):
        assert h.has_edge(i, j) == g.has_edge(m[i], m[j])


def test_subgraph_copy_ignores_extra_edges():
    assert find_copy(G.complete(4), G.path(3), induced=False) is not None
    assert find_copy(G.cycle(5), G.complete(3), induced=False) is None


def test_find_copy_matches_brute_force_oracle():
    patterns = [Graph.from_pairmask(4, m) for m in range(0, 64, 3)] + [G.path(3), G.complete(3)]
    for g in list(labeled_graphs(5))[::7]:
        for h in patterns:
            for induced in (True, False):
                got = find_copy(g, h, induced) is not None
                assert got == (brute_copy(g, h, induced) is not None)


@given(graphs(max_n=7))
def test_find_copy_oracle_random(g):
    for h in (G.path(4), G.star(3), G.cycle(4), G.disjoint_union(G.complete(3), G.complete(1))):
        assert (find_induced_copy(g, h) is None) == (brute_copy(g, h) is None)


def test_generators():
    assert are_isomorphic(G.complete_multipartite(2, 2), G.cycle(4))
    c5 = G.cycle(5)
    assert (c5.n, c5.num_edges, set(c5.degrees())) == (5, 5, {2})
    assert G.gnp(20, 0.5, seed=7) == G.gnp(20, 0.5, seed=7)
    assert sorted(G.star(4).degrees()) == [1, 1, 1, 1, 4]
    assert G.complete_multipartite(3, 2).num_edges == comb(6, 2) - 3


def test_generator_errors():
    with pytest.raises(ValueError):
        G.cycle(2)
    with pytest.raises(ValueError):
        G.complete(65)
    with pytest.raises(ValueError):
        G.gnp(5, 1.5)


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, (1,))  # loop
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 0)])


def test_relabel_and_induced():
    p = G.path(4)
    q = p.relabel([3, 2, 1, 0])
    assert q == p
    assert p.induced([0, 1, 2]) == G.path(3)
    for perm in permutations(range(4)):
        assert are_isomorphic(p.relabel(list(perm)), p)


def test_density_is_exact():
    from fractions import Fraction

    assert G.cycle(5).density == Fraction(1, 2)
    assert G.empty(1).density == 0
