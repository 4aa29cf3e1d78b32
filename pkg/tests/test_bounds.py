import math
from fractions import Fraction
from math import comb

import pytest

from gel import graph as G
from gel.bounds import (
    asymptotic_lower_bound, balanced_split_distance, chernoff_bound_value, erdos_stone_estimate,
    lub_float, lub_value, one_sided_factor, q_family_bounds, report, turan_number, upper_bound,
    worst_density, worst_value,
)
from gel.errors import DegenerateInput
from gel.families import NAMED_GRAPHS, Q_FAMILY
from gel.heuristic import is_degenerate

GRID = [Fraction(i, 1000) for i in range(1001)]
KC = [(k, c) for k in range(1, 7) for c in range(k + 1)]


def test_turan_numbers():
    assert turan_number(5, 3) == 6
    assert turan_number(6, 3) == 9
    assert turan_number(7, 4) == 16
    assert [turan_number(n, 3) for n in range(1, 8)] == [n * n // 4 for n in range(1, 8)]
    with pytest.raises(ValueError):
        turan_number(5, 1)


def test_erdos_stone_estimate():
    for n in range(2, 9):
        assert erdos_stone_estimate(n, 3) == Fraction(comb(n, 2), 2)
    assert erdos_stone_estimate(6, 4) == 10
    # leading term only; the exact Turan number differs
    assert erdos_stone_estimate(6, 3) == Fraction(15, 2) != turan_number(6, 3)
    with pytest.raises(DegenerateInput):
        erdos_stone_estimate(6, 2)


def test_asymptotic_lower_bound():
    assert asymptotic_lower_bound(10, 1) == 25
    assert asymptotic_lower_bound(10, 2) == Fraction(25, 2)


def test_upper_bound_cases():
    n = 9
    pairs = comb(n, 2)
    assert upper_bound(n, 2, 0, 2) == (Fraction(pairs, 4), "UB1")
    value, case = upper_bound(n, 3, 0, 0)
    assert case == "UB2" and value == pytest.approx(pairs / 3)
    assert one_sided_factor(2, 4) == pytest.approx(0.5)
    value, case = upper_bound(n, 5, 1, 1)
    assert case == "UB2" and value <= pairs / 5


@pytest.mark.parametrize("k", range(1, 8))
def test_one_sided_bound_never_exceeds_trivial(k):
    for c0 in range(k + 1):
        assert one_sided_factor(c0, k) * 45 / k <= 45 / k + 1e-12


def test_lub_endpoints_vanish_unless_degenerate():
    for k, c in KC:
        for d in (Fraction(0), Fraction(1)):
            v = lub_value(d, 10, k, c)
            if is_degenerate(d, k, c):
                assert v == Fraction(45, k)
            else:
                assert v == 0


def test_worst_density_maximises_the_bound():
    n = 10
    for k, c in KC:
        ds = worst_density(k, c)
        top = lub_float(ds, n, k, c)
        assert top == pytest.approx(worst_value(n, k, c), rel=1e-9) or is_degenerate(round(ds, 12), k, c)
        for d in GRID:
            if not is_degenerate(d, k, c):
                assert float(lub_value(d, n, k, c)) <= top + 1e-9


def test_worst_density_special_cases():
    assert worst_density(4, 2) == 0.5
    assert worst_value(10, 4, 2) == pytest.approx(45 / 8)
    assert worst_density(2, 0) == 1.0
    assert lub_value(1, 10, 2, 0) == Fraction(45, 2)
    ds = worst_density(3, 1)
    assert ds == pytest.approx((2 - math.sqrt(2)) / 1)


def test_half_cap_regions():
    """Below C(n,2)/(2k) exactly on the stated density intervals."""
    for k, c in KC:
        cap = Fraction(comb(10, 2), 2 * k)
        for d in GRID:
            if is_degenerate(d, k, c):
                continue
            inside = lub_value(d, 10, k, c) <= cap
            if 2 * c <= k:
                want = d <= Fraction(1, 2) or d >= 1 - Fraction(c, k)
            else:
                want = d >= Fraction(1, 2) or d <= 1 - Fraction(c, k)
            assert inside == want, (k, c, d)


def test_balanced_split_and_q_bounds():
    assert [balanced_split_distance(n) for n in range(4, 8)] == [2, 4, 6, 9]
    assert q_family_bounds(4) == (-1, 3)
    assert q_family_bounds(7) == (3, 10)


def test_chernoff_value():
    want = 2 * 4**128 * math.exp(-2 * 0.0625 * 0.01 * 16384)
    assert chernoff_bound_value(128, 0.25, 0.1) == pytest.approx(want)
    assert chernoff_bound_value(10**6, 0.001, 0.001) == math.inf or chernoff_bound_value(10**6, 0.001, 0.001) > 0


def test_report_for_triangle():
    rep = report(6, NAMED_GRAPHS["K3"], "K3")
    assert (rep.chi_b, rep.k, rep.c_min, rep.c_max) == (3, 2, 0, 0)
    assert rep.turan_value == 6 and rep.split_value == 6 and rep.exact == 6
    assert rep.upper_case == "UB2" and rep.upper_bound == pytest.approx(7.5)
    assert rep.lower_bound == pytest.approx(36 / 8)
    assert any("asymptotic" in note for note in rep.notes)
    assert len(rep.lub_curve) == 101


def test_report_for_p4_and_q():
    rep = report(6, NAMED_GRAPHS["P4"], "P4")
    assert rep.upper_case == "UB1" and rep.upper_bound == 7.5 and rep.exact == 2
    assert rep.turan_value is None and rep.split_value is None
    q = report(6, Q_FAMILY)
    assert q.q_bounds == (1, 7) and q.exact == 4 and q.chi_b is None


def test_report_csv_and_rows():
    rep = report(5, G.cycle(5), "C5", exact=False)
    lines = rep.lub_csv().splitlines()
    assert lines[0] == "d,bound" and len(lines) == 102
    assert dict(rep.rows())["lub_curve"] == "101 samples"
    assert rep.exact is None


def test_report_rejects_k_zero():
    with pytest.raises(ValueError):
        report(5, G.complete(1), "K1")
