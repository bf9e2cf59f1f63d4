import math

import pytest

from fllmetric.errors import DomainError
from fllmetric.extremal import (
    alpha_window, balanced_ball_diff, balanced_ball_size, is_nonbinary_max_center,
    l1_size_formula, max_ball_binary, max_ball_binary_asymptotic, max_ball_nonbinary,
    min_ball_size, optimal_alpha_set,
)
from fllmetric.metric import fll_ball_members
from fllmetric.words import Word, all_words, alternating_profile, is_balanced, make_balanced


def W(s, q=2):
    return Word.parse(s, q)


def test_l1_formula_examples():
    assert l1_size_formula(W("0000000")) == 8 == len(fll_ball_members(W("0000000"), 1))
    assert l1_size_formula(W("0101")) == 11
    assert l1_size_formula(W("1120212", 3)) == 78 == len(fll_ball_members(W("1120212", 3), 1))


def test_min_examples():
    r = min_ball_size(3, 2, 1)
    assert r.size == 4 and set(r.witnesses) == {W("000"), W("111")}
    assert min_ball_size(5, 3, 0).size == 1
    assert min_ball_size(4, 3, 2).size == 33
    with pytest.raises(DomainError):
        min_ball_size(2, 2, 2)


def test_nonbinary_max_examples():
    r = max_ball_nonbinary(4, 3)
    assert r.size == 30 and r.witnesses == (W("0120", 3),)
    assert max_ball_nonbinary(2, 3).size == 8
    assert max_ball_nonbinary(1, 3).size == 3
    with pytest.raises(DomainError):
        max_ball_nonbinary(4, 2)
    assert is_nonbinary_max_center(W("0120", 3)) and not is_nonbinary_max_center(W("0101", 3))


def test_balanced_examples():
    assert balanced_ball_size(7, 3) == 31 == l1_size_formula(make_balanced(7, 3))
    assert balanced_ball_size(7, 2) == 34
    assert balanced_ball_size(4, 1) == balanced_ball_size(4, 2) == 11
    assert balanced_ball_diff(8, 2) > 0
    assert balanced_ball_diff(4, 2) == 0
    assert balanced_ball_diff(7, 3) == -3
    with pytest.raises(DomainError):
        balanced_ball_diff(5, 1)
    with pytest.raises(DomainError):
        balanced_ball_size(3, 4)


def test_balanced_size_matches_every_balanced_word():
    for n in range(1, 41):
        for a in range(1, n + 1):
            assert l1_size_formula(make_balanced(n, a)) == balanced_ball_size(n, a)


def test_optimal_alpha_examples():
    assert optimal_alpha_set(7) == {2}
    assert optimal_alpha_set(4) == {1, 2}
    assert optimal_alpha_set(12) == {2, 3}
    with pytest.raises(DomainError):
        optimal_alpha_set(0)


def test_optimal_alpha_agrees_with_window():
    for n in range(1, 10_001):
        s = optimal_alpha_set(n)
        assert s == alpha_window(n), n
        # tie exactly at n = 2a(a-1)
        a = max(s)
        assert (len(s) == 2) == (n == 2 * a * (a - 1))
        sizes = {balanced_ball_size(n, x) for x in s}
        assert len(sizes) == 1


def test_optimal_alpha_is_global_argmax():
    for n in range(1, 300):
        best = max(balanced_ball_size(n, a) for a in range(1, n + 1))
        argmax = {a for a in range(1, n + 1) if balanced_ball_size(n, a) == best}
        assert argmax == optimal_alpha_set(n)


def test_max_binary_examples():
    assert max_ball_binary(7).size == 34
    r = max_ball_binary(3)
    assert r.size == 7 and r.alpha_set == {1}
    assert set(r.iter_witnesses()) == {W("010"), W("101")}
    assert max_ball_binary(1).size == 2
    r4 = max_ball_binary(4)
    assert r4.size == 11 and r4.alpha_set == {1, 2}
    assert r4.k == {1: 1, 2: 2}
    with pytest.raises(DomainError):
        max_ball_binary(0)


def test_asymptotic_examples():
    assert max_ball_binary_asymptotic(100) == pytest.approx(8585.786, abs=1e-3)
    assert abs(max_ball_binary(100).size - max_ball_binary_asymptotic(100)) <= 500
    assert max_ball_binary_asymptotic(1) == pytest.approx(1 - math.sqrt(2))
    assert abs(max_ball_binary(400).size - max_ball_binary_asymptotic(400)) <= 2000


def test_diff_sign():
    for a in range(2, 9):
        for n in range(a, 201):
            d = balanced_ball_diff(n, a)
            s = n - 2 * a * (a - 1)
            assert (d > 0) - (d < 0) == (s > 0) - (s < 0), (n, a)


def test_balanced_maximize_within_fixed_segment_count():
    """Among binary words with A segments, the ball is largest exactly on balanced words."""
    for n in range(1, 13):
        by_a = {}
        for w in all_words(n, 2):
            a = alternating_profile(w).A
            by_a.setdefault(a, []).append((l1_size_formula(w), w))
        for a, items in by_a.items():
            best = max(s for s, _ in items)
            assert {w for s, w in items if s == best} == {w for _, w in items if is_balanced(w, a)}
