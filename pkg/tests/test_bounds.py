from math import comb

import pytest

from heawood import bounds
from heawood.errors import ParameterError


def test_heawood_examples():
    assert bounds.heawood_max_n(0) == 4
    assert bounds.heawood_max_n(2) == 7
    assert bounds.heawood_check(7, 2)
    assert not bounds.heawood_check(8, 2)


def test_heawood_max_is_maximal():
    for b1 in range(0, 60):
        n = bounds.heawood_max_n(b1)
        assert bounds.heawood_check(n, b1) and not bounds.heawood_check(n + 1, b1)


def test_generalized_small_cases():
    # C(n-2, 2) <= 0 forces n - 2 < 2
    assert [n for n in range(1, 20) if bounds.generalized_heawood_check(n, 1, 0)] == [1, 2, 3]
    for k in range(1, 6):
        assert max(n for n in range(1, 40) if bounds.generalized_heawood_check(n, k, 0)) == 2 * k + 1


def test_generalized_agrees_with_heawood_at_k1():
    # the k-skeleton of the n-simplex has n+1 vertices, so the complete graph is K_{n+1}
    for b in range(0, 8):
        for n in range(2, 1001):
            assert bounds.generalized_heawood_check(n, 1, b) == bounds.heawood_check(n + 1, b)
    for n in range(3, 101):
        assert 2 * comb(n - 2, 2) == (n - 2) * (n - 3)


def test_thm2():
    assert bounds.thm2_bound(1, 0) == 6
    assert bounds.thm2_bound(2, 1) == 2 * comb(6, 2) + 8 == 38
    for k in range(1, 8):
        assert bounds.thm2_bound(k, 0) == 2 * k + 4


def test_thm3():
    for k in range(1, 11):
        for b in range(0, 5):
            assert bounds.thm3_bound(2, k, b) == bounds.thm2_bound(k, b)
    assert bounds.thm3_bound(3, 2, 0) == 16
    with pytest.raises(ParameterError):
        bounds.thm3_bound(6, 1, 1)


def test_dim_constraint():
    for k in range(1, 6):
        assert bounds.dim_constraint(2, k, 2 * k)
        assert not bounds.dim_constraint(2, k, 2 * k + 1)
    assert bounds.dim_constraint(3, 2, 3) and not bounds.dim_constraint(3, 2, 4)


def test_n0_weak():
    assert bounds.n0_weak(1, 1, 4, 2) == 9 * 1024 + 4 + 1 == 9221
    assert bounds.n0_weak(1, 1, 4, 3) == 9 * 3**10 + 5 == 531446
    assert bounds.n0_weak(1, 0, 4, 2) == (10 - 1) + 4 + 1
    big = bounds.n0_weak(2, 3, 8, 5)
    assert big == (comb(9, 3) - 1) * 5 ** (3 * comb(9, 3)) + 9
    assert big > 2**500
    assert bounds.weak_unused_threshold(1, 1, 4, 2) == 9217


def test_n0_strong():
    assert bounds.n0_strong(1, 1, 4) == 15
    assert bounds.n0_strong(2, 1, 6) == 39
    for k in range(1, 6):
        for s in range(2 * k, 31):
            assert bounds.n0_strong(k, 0, s) == 2 * s - 2 * k + 1
            for b in range(0, 6):
                assert bounds.n0_strong(k, b, s) == bounds.n0_strong_factored(k, b, s)
    with pytest.raises(ParameterError):
        bounds.n0_strong(2, 1, 3)


def test_informational_threshold_is_smaller():
    assert bounds.n0_improved_informational(1, 1, 4) == 13
    assert bounds.n0_improved_informational(1, 1, 4) < bounds.n0_strong(1, 1, 4)


def test_strong_never_exceeds_weak():
    for k in range(1, 4):
        for b in range(1, 4):
            for s in range(2 * k + 1, 2 * k + 6):
                for p in (2, 3, 5):
                    assert bounds.n0_strong(k, b, s) <= bounds.n0_weak(k, b, s, p)


def test_report_json_keeps_big_values_exact():
    rep = bounds.BoundReport("n0_weak", {"k": 2}, bounds.n0_weak(2, 3, 8, 5))
    assert int(rep.to_json()["value"]) == rep.value
