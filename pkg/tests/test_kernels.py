import random
from fractions import Fraction

import pytest

from egy._kernels import _core_py

_core_cy = pytest.importorskip(
    "egy._kernels._core_cy", reason="compiled kernels not built"
)


def test_backend_labels():
    assert _core_py.BACKEND == "python"
    assert _core_cy.BACKEND == "cython"


def test_two_term_max_below_differential():
    rng = random.Random(12)
    for _ in range(2000):
        xd = rng.randrange(2, 10**6)
        xn = rng.randrange(1, xd)
        thr_d = xd * rng.randrange(1, 60)
        thr_n = max(1, xn * thr_d // xd - rng.randrange(0, 200))
        a_min = rng.randrange(1, 60)
        allow_equal = bool(rng.getrandbits(1))
        cap = rng.choice([None, 5, 777, 10**5])
        args = (xn, xd, a_min, thr_n, thr_d, allow_equal, cap)
        assert _core_py.two_term_max_below(*args) == _core_cy.two_term_max_below(*args)


def test_two_term_max_below_bignum_differential():
    rng = random.Random(13)
    for _ in range(200):
        xd = rng.randrange(2**70, 2**75)  # force the object path
        xn = rng.randrange(xd // 5000, xd // 2)
        thr_d = xd * rng.randrange(1, 5)
        thr_n = max(1, xn * thr_d // xd - rng.randrange(0, 10**6))
        args = (xn, xd, 2, thr_n, thr_d, False, 10**4)
        assert _core_py.two_term_max_below(*args) == _core_cy.two_term_max_below(*args)


def test_two_term_max_below_result_is_valid():
    x = Fraction(11, 24)
    found, num, den, a, b, _ = _core_py.two_term_max_below(11, 24, 1, 1, 100)
    assert found
    assert Fraction(num, den) == Fraction(1, a) + Fraction(1, b) == Fraction(9, 20)
    assert (a, b) == (4, 5)


def test_min_competitors_differential():
    for i in (2, 3, 7, 25, 113, 500):
        assert _core_py.two_term_min_competitors(i) == _core_cy.two_term_min_competitors(i)


def test_min_competitors_against_naive():
    # naive double loop with Fractions, no windows
    i = 9
    lo, hi = Fraction(1, i), Fraction(1, i - 1)
    mins = {}
    for a in range(2, 200):
        for b in range(a + 1, 10**4):
            s = Fraction(1, a) + Fraction(1, b)
            if not (lo < s <= hi) or a <= i:
                continue
            gap = s - lo
            j = gap.denominator // gap.numerator + 1
            if j not in mins or s < mins[j]:
                mins[j] = s
    got = {
        j: Fraction(n, d) for j, n, d in _core_py.two_term_min_competitors(i)
    }
    assert got == mins


def test_direct_terms_differential():
    for i in (2, 3, 10, 200, 1500):
        assert _core_py.direct_mode_terms(i) == _core_cy.direct_mode_terms(i)


def test_direct_terms_match_xk():
    from egy.lemma1 import xk

    i = 37
    terms = _core_py.direct_mode_terms(i)
    expected = []
    for k in range(i * (i + 1) // 10 + 1):
        x = xk(i, k)
        if x.denominator != 1:
            f = x.numerator // x.denominator
            expected.append((f, Fraction(1, f) - 1 / x))
    assert len(terms) == len(expected)
    for (f1, num, den), (f2, length) in zip(terms, expected):
        assert f1 == f2
        assert Fraction(num, den) == length


def test_budget_abort_shape():
    # x = 1/10^6 with a threshold just below forces a ~10^6-long scan
    args = (1, 10**6, 2, 1, 10**6 + 1, False, 7)
    res = _core_py.two_term_max_below(*args)
    assert res[0] is False and res[5] == 8
    assert _core_cy.two_term_max_below(*args) == res
