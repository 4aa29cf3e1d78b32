import pytest
from hypothesis import given

from gel import graph as G
from gel.canon import enumerate_nonisomorphic
from gel.chib import (
    binary_chromatic, binary_chromatic_number, c_min_c_max, chromatic_number,
    clique_cover_number, exists_partition, feasibility_table, max_clique,
)
from gel.families import NAMED_GRAPHS
from gel.limits import Limits
from gel.errors import SolverTimeout
from gel.oracles import brute_binary_chromatic, brute_chromatic, brute_partition_exists

from conftest import graphs


def test_exists_partition_examples():
    k3 = G.complete(3)
    p = exists_partition(k3, 0, 3)
    assert p is not None and p.is_valid_for(k3) and p.cliques == 0
    assert exists_partition(k3, 0, 2) is None
    p = exists_partition(G.cycle(5), 1, 2)
    assert p is not None and p.is_valid_for(G.cycle(5))
    assert p.cliques <= 1 and p.cocliques <= 2


@given(graphs(max_n=6))
def test_exists_partition_matches_oracle(g):
    for c in range(3):
        for s in range(3):
            got = exists_partition(g, c, s)
            assert (got is not None) == brute_partition_exists(g, c, s)
            if got is not None:
                assert got.problems(g) == []
                assert got.cliques <= c and got.cocliques <= s


def test_prop_examples():
    assert binary_chromatic_number(G.cycle(7)) == 4
    assert binary_chromatic_number(G.complete_multipartite(3, 2)) == 4
    assert binary_chromatic_number(G.complete(1)) == 1


@pytest.mark.parametrize("n", range(5, 10))
def test_cycles(n):
    assert binary_chromatic_number(G.cycle(n)) == (n + 1) // 2


@pytest.mark.parametrize("n", range(3, 10))
def test_paths(n):
    assert binary_chromatic_number(G.path(n)) == (n + 1) // 2


@pytest.mark.parametrize("p", [1, 2, 3])
@pytest.mark.parametrize("q", [1, 2, 3])
def test_complete_multipartite(p, q):
    g = G.complete_multipartite(p, q)
    assert binary_chromatic_number(g) == p + q - 1
    # the upper bound chi + chi(co) - 1 is tight here
    assert binary_chromatic_number(g) == chromatic_number(g) + chromatic_number(g.complement()) - 1


def test_c_min_c_max_examples():
    assert c_min_c_max(NAMED_GRAPHS["P4"]) == (1, 0, 1)
    assert c_min_c_max(G.complete(3)) == (2, 0, 0)
    k, lo, hi = c_min_c_max(G.cycle(5))
    bad = [c for c in range(3) if not brute_partition_exists(G.cycle(5), c, 2 - c)]
    assert (k, lo, hi) == (2, bad[0], bad[-1])


def test_c_min_c_max_needs_k_at_least_one():
    with pytest.raises(ValueError):
        c_min_c_max(G.complete(1))


@given(graphs(min_n=1, max_n=5))
def test_binary_chromatic_matches_oracle(g):
    assert binary_chromatic_number(g) == brute_binary_chromatic(g)


@given(graphs(min_n=1, max_n=6))
def test_chromatic_matches_oracle(g):
    assert chromatic_number(g) == brute_chromatic(g)
    assert clique_cover_number(g) == brute_chromatic(g.complement())
    assert len(max_clique(g)) == max(1, max((len(c) for c in _cliques(g)), default=1))


def _cliques(g):
    from itertools import combinations

    for r in range(1, g.n + 1):
        for vs in combinations(range(g.n), r):
            if all(g.has_edge(a, b) for a, b in combinations(vs, 2)):
                yield vs


def test_properties_on_all_six_vertex_graphs():
    for g in enumerate_nonisomorphic(6):
        cb = binary_chromatic_number(g)
        chi, chic = chromatic_number(g), chromatic_number(g.complement())
        assert cb >= max(chi, chic)
        assert cb == binary_chromatic_number(g.complement())
        assert cb <= chi + chic - 1


@given(graphs(min_n=1, max_n=6))
def test_feasibility_table_threshold(g):
    res = binary_chromatic(g)
    assert res.table.all_feasible
    if res.chi_b > 1:
        assert not feasibility_table(g, res.chi_b - 1).all_feasible
    for c, w in res.table.witnesses.items():
        assert w is not None and w.is_valid_for(g)


def test_node_budget_is_enforced():
    with pytest.raises(SolverTimeout):
        binary_chromatic(G.cycle(9), Limits(budget=3))


def test_size_cap():
    with pytest.raises(ValueError):
        binary_chromatic(G.path(31))


def test_feasibility_json():
    rows = binary_chromatic(G.cycle(5)).table.to_json()
    assert [r["cliques"] for r in rows] == [0, 1, 2, 3]
    assert all(r["cliques"] + r["cocliques"] == 3 for r in rows)
