"""The compiled and pure-Python kernels must agree exactly."""
import pytest
from hypothesis import given, settings, strategies as st

from fllmetric import _pykernels, kernels
from fllmetric.extremal import l1_size_formula
from fllmetric.metric import fll_ball_members
from fllmetric.words import Word, all_words

from conftest import compiled_available

words = st.integers(2, 5).flatmap(
    lambda q: st.lists(st.integers(0, q - 1), min_size=1, max_size=10).map(lambda s: (q, tuple(s))))


def test_backend_name():
    assert kernels.BACKEND in ("compiled", "python")


@given(words)
def test_l1_matches_profile_formula(backend, qw):
    q, x = qw
    assert backend.l1_size(x, q) == l1_size_formula(Word(q, x))


@settings(max_examples=60, deadline=None)
@given(words, st.integers(0, 2))
def test_ball_size_matches_enumeration(backend, qw, t):
    q, x = qw
    if t > len(x) or q**len(x) > 5000:
        return
    assert backend.ball_size(x, q, t) == len(fll_ball_members(Word(q, x), t))


@given(st.lists(st.integers(0, 3), max_size=12), st.lists(st.integers(0, 3), max_size=12))
def test_lcs_agrees(backend, a, b):
    assert backend.lcs_length(tuple(a), tuple(b)) == _pykernels.lcs_length(tuple(a), tuple(b))


@pytest.mark.parametrize("n,q,t,mode", [
    (8, 2, 1, 2), (5, 3, 1, 2), (5, 3, 2, 1), (4, 4, 1, 2), (6, 2, 0, 2), (1, 2, 1, 2),
])
def test_sweep_range_backends_agree(backend, n, q, t, mode):
    size = q**n
    for lo, hi in [(0, size), (1, size - 1), (size // 3, size // 2), (3, 3)]:
        a = backend.sweep_range(n, q, t, lo, hi, mode, -1)
        b = _pykernels.sweep_range(n, q, t, lo, hi, mode, -1)
        assert tuple(a) == tuple(b)


def test_sweep_range_cap(backend):
    out = backend.sweep_range(6, 2, 1, 0, 64, 0, 1)
    assert len(out[2]) == 1 and out[1] == 2
    assert len(out[5]) == 1


@pytest.mark.skipif(not compiled_available(), reason="compiled extension not built")
def test_large_alphabet_falls_back():
    from fllmetric import _ckernels
    x = tuple(range(20)) * 2
    assert _ckernels.l1_size(x, 40) == _pykernels.l1_size(x, 40)
    assert _ckernels.ball_size((0, 39, 5), 40, 1) == _pykernels.ball_size((0, 39, 5), 40, 1)


def test_exhaustive_small_ball_agreement(backend):
    for w in all_words(6, 2):
        for t in range(3):
            assert backend.ball_size(w.symbols, 2, t) == _pykernels.ball_size(w.symbols, 2, t)
