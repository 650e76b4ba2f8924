import random
from fractions import Fraction

import pytest

from egy.lemma1 import lemma1_certificate, nongreedy_two_term_measure, xk
from egy.search import best_underapprox
from oracle_bruteforce import brute_two_term_nongreedy


def test_xk_at_zero():
    for i in (2, 10, 1000):
        assert xk(i, 0) == i * (i + 1)


def test_xk_rewrite_identity():
    for i, k in ((1000, 7), (17, 3), (2048, 100)):
        lhs = Fraction(1, i + 1) + Fraction(1, i * (i + 1) // 2 + k)
        rhs = Fraction(1, i) + 1 / xk(i, k)
        assert lhs == rhs


def test_xk_explicit_value():
    assert xk(1000, 1) == Fraction(1001000 * 1001002, 1000998)


def test_xk_range_errors():
    with pytest.raises(ValueError):
        xk(1, 0)
    with pytest.raises(ValueError):
        xk(10, -1)
    with pytest.raises(ValueError):
        xk(10, 12)  # floor(110/10) = 11 is the max


def test_xk_spacing_exceeds_one():
    rng = random.Random(3)
    for _ in range(50):
        i = rng.randrange(2, 300)
        kmax = i * (i + 1) // 10
        k = rng.randrange(0, kmax)
        assert xk(i, k + 1) - xk(i, k) > 1


def test_paper_mode_requires_large_i():
    with pytest.raises(ValueError):
        lemma1_certificate(999, "paper")
    with pytest.raises(ValueError):
        lemma1_certificate(1000, "nonsense")


def test_paper_certificate_at_1000():
    report = lemma1_certificate(1000, "paper")
    assert report.passed
    assert report.selected_count * 200 >= 1000 * 1000
    assert report.certified_measure * 1000 * 999 * 1000 > 1
    assert 0 <= report.certified_measure <= report.interval_length


def test_direct_dominates_paper():
    paper = lemma1_certificate(1000, "paper")
    direct = lemma1_certificate(1000, "direct")
    assert paper.certified_measure <= direct.certified_measure


def test_exact_dominates_direct_small_i():
    for i in (40, 120):
        direct = lemma1_certificate(i, "direct")
        exact = lemma1_certificate(i, "exact")
        assert direct.certified_measure <= exact.certified_measure
        assert exact.certified_measure <= exact.interval_length


def test_exact_measure_against_point_classification():
    # classify random points of (1/i, 1/(i-1)] with the solver and compare
    # the hit fraction against the exact measure ratio
    i = 10
    measure = nongreedy_two_term_measure(i)
    ratio = measure * (i - 1) * i
    rng = random.Random(99)
    width = Fraction(1, i - 1) - Fraction(1, i)
    hits = 0
    trials = 2000
    for _ in range(trials):
        x = Fraction(1, i) + width * Fraction(rng.randrange(1, 2**32 + 1), 2**32)
        value, _ = best_underapprox(x, 2)
        g1 = Fraction(1, i)
        g2gap = x - g1
        m2 = g2gap.denominator // g2gap.numerator + 1
        greedy = g1 + Fraction(1, m2)
        if value > greedy:
            hits += 1
    observed = Fraction(hits, trials)
    assert abs(observed - ratio) < Fraction(1, 30)  # ~3 sigma at n=2000


def test_membership_soundness_sampled():
    # midpoints of right-part intervals must have a best two-term value at
    # least the competitor sum, which strictly beats greedy
    i = 1000
    big = i * (i + 1)
    rng = random.Random(5)
    for _ in range(100):
        k = rng.randrange(1, big // 10)
        x_val = xk(i, k)
        if x_val.denominator == 1:
            continue
        floor_x = x_val.numerator // x_val.denominator
        left = Fraction(1, i) + 1 / x_val
        right = Fraction(1, i) + Fraction(1, floor_x)
        mid = (left + right) / 2
        competitor = Fraction(1, i + 1) + Fraction(1, big // 2 + k)
        value, _ = best_underapprox(mid, 2)
        assert value >= competitor
        gap = mid - Fraction(1, i)
        m2 = gap.denominator // gap.numerator + 1
        greedy = Fraction(1, i) + Fraction(1, m2)
        assert value > greedy


def test_nongreedy_measure_bounds():
    for i in (2, 3, 10, 50):
        m = nongreedy_two_term_measure(i)
        assert 0 <= m <= Fraction(1, (i - 1) * i)
    with pytest.raises(ValueError):
        nongreedy_two_term_measure(1)


def test_nongreedy_against_independent_scan():
    # second oracle: dense grid classification at small i
    i = 6
    measure = nongreedy_two_term_measure(i)
    width = Fraction(1, i - 1) - Fraction(1, i)
    grid = 4000
    hits = sum(
        brute_two_term_nongreedy(i, Fraction(1, i) + width * Fraction(j, grid))
        for j in range(1, grid + 1)
    )
    # grid estimate converges at rate ~ #cells/grid
    assert abs(Fraction(hits, grid) - measure / width) < Fraction(1, 40)


def test_report_dict_round_trip():
    report = lemma1_certificate(50, "exact")
    d = report.to_dict()
    assert d["i"] == 50
    assert d["mode"] == "exact"
    assert d["pass"] == report.passed
    assert set(d) == {
        "i", "mode", "selected_count", "certified_measure",
        "interval_length", "ratio", "pass",
    }
