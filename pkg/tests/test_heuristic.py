from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from gel import graph as G
from gel.canon import enumerate_nonisomorphic
from gel.chib import c_min_c_max
from gel.editdist import dist_to_forb
from gel.errors import DegenerateInput
from gel.families import NAMED_GRAPHS, ForbiddenFamily
from gel.graph import find_induced_copy
from gel.heuristic import (
    EditorPlan, apply_coloring, choose_c, derandomized_edit, expected_edits, is_degenerate,
    make_plan, optimal_probabilities, plan_expectation, randomized_edit,
)

from conftest import graphs

densities = st.fractions(min_value=0, max_value=1, max_denominator=60)


def test_choose_c_examples():
    assert choose_c(0.3, 2, 0, 2) == 0
    assert choose_c(0.9, 2, 0, 2) == 2
    assert choose_c(0.5, 2, 0, 0) == 0


def test_choose_c_tie_prefers_smaller():
    # k=4, candidates 1 and 3 are equally far from 2
    assert choose_c(Fraction(1, 3), 4, 3, 3) == 3
    assert choose_c(Fraction(1, 3), 4, 1, 1) == 1


@given(densities, st.integers(1, 6), st.data())
def test_choose_c_minimises_expectation(d, k, data):
    c_min = data.draw(st.integers(0, k // 2))
    c_max = data.draw(st.integers((k + 1) // 2, k))
    c = choose_c(d, k, c_min, c_max)
    assert c in (c_min, c_max)
    assert expected_edits(d, 10, k, c) <= Fraction(comb(10, 2), 2 * k)
    others = [expected_edits(d, 10, k, x) for x in (c_min, c_max)]
    assert expected_edits(d, 10, k, c) == min(others)


def test_optimal_probabilities_examples():
    assert optimal_probabilities(Fraction(1, 2), 2, 1) == (Fraction(1, 2), Fraction(1, 2))
    assert optimal_probabilities(0, 3, 1) == (0, Fraction(1, 2))
    p, q = optimal_probabilities(0.4, 3, 1)
    assert (p, q) == (Fraction(1, 4), Fraction(3, 8))
    assert 1 * p + 2 * q == 1


def test_degenerate_cases_signal():
    assert is_degenerate(0, 3, 3) and is_degenerate(1, 3, 0)
    with pytest.raises(DegenerateInput):
        optimal_probabilities(0, 3, 3)
    with pytest.raises(DegenerateInput):
        optimal_probabilities(1, 2, 0)
    plan = make_plan(0, 3, 3)
    assert plan.degenerate and plan.p == Fraction(1, 3)


@given(densities, st.integers(1, 6), st.data())
def test_plan_constraint_is_exact(d, k, data):
    c = data.draw(st.integers(0, k))
    plan = make_plan(d, k, c)
    assert plan.c * plan.p + (plan.k - plan.c) * plan.q == 1


def test_plan_rejects_bad_probabilities():
    with pytest.raises(ValueError):
        EditorPlan(2, 1, Fraction(1, 2), Fraction(1, 3), Fraction(1, 2))


def test_expected_edits_examples():
    assert expected_edits(Fraction(1, 2), 8, 2, 1) == Fraction(comb(8, 2), 4)
    assert expected_edits(0, 7, 3, 3) == Fraction(21, 3)
    assert expected_edits(0.4, 10, 3, 1) == Fraction(27, 4)


@given(graphs(min_n=2, max_n=8), st.integers(1, 4), st.data())
def test_plan_expectation_matches_closed_form(g, k, data):
    c = data.draw(st.integers(0, k))
    plan = make_plan(g.density, k, c)
    assert plan_expectation(plan, g) == expected_edits(g.density, g.n, k, c)


def test_apply_coloring_examples():
    e5 = G.empty(5)
    out = apply_coloring(e5, [0] * 5, make_plan(0, 1, 1))
    assert out.edit_count == 10 and out.graph == G.complete(5)
    g = G.cycle(5)
    plan = make_plan(g.density, 5, 2)
    assert apply_coloring(g, list(range(5)), plan).edit_count == 0
    assert derandomized_edit(G.complete(6), 1, 1).edit_count == 0


@given(graphs(min_n=1, max_n=9), st.integers(0, 2**32))
def test_randomized_output_is_partitioned(g, seed):
    for h in ("P4", "C5", "K3"):
        k, lo, hi = c_min_c_max(NAMED_GRAPHS[h])
        c = choose_c(g.density, k, lo, hi)
        out = randomized_edit(g, k, c, seed=seed)
        assert out.partition.is_valid_for(out.graph)
        assert out.partition.cliques <= c and out.partition.cocliques <= k - c
        assert find_induced_copy(out.graph, NAMED_GRAPHS[h]) is None


def test_randomized_is_reproducible():
    g = G.gnp(15, 0.5, seed=11)
    a = randomized_edit(g, 2, 1, seed=5)
    b = randomized_edit(g, 2, 1, seed=5)
    assert a.colors == b.colors and a.edits == b.edits


def test_derandomized_within_expectation_on_six_vertices():
    k, lo, hi = c_min_c_max(NAMED_GRAPHS["P4"])
    f = ForbiddenFamily.single(NAMED_GRAPHS["P4"])
    for g in enumerate_nonisomorphic(6):
        c = choose_c(g.density, k, lo, hi)
        out = derandomized_edit(g, k, c)
        assert out.edit_count <= expected_edits(g.density, 6, k, c)
        assert dist_to_forb(g, f, lex_least=False).distance <= out.edit_count
        assert find_induced_copy(out.graph, NAMED_GRAPHS["P4"]) is None


@given(graphs(min_n=1, max_n=10), st.integers(1, 4), st.data())
def test_derandomized_dominance_general(g, k, data):
    c = data.draw(st.integers(0, k))
    out = derandomized_edit(g, k, c)
    assert out.edit_count <= expected_edits(g.density, g.n, k, c)
    assert out.partition.is_valid_for(out.graph)
