"""Distances, deletion/insertion spheres and ball enumeration.

These are the brute-force oracles: everything is computed by explicit
enumeration of subsequences and supersequences, never from run statistics.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Optional

from . import kernels
from .errors import DomainError, UnsupportedRadiusError
from .words import Word, all_words, runs

__all__ = [
    "BallReport",
    "lcs_length",
    "fll_distance",
    "levenshtein_distance",
    "hamming_distance",
    "hamming_ball_size",
    "deletion_sphere",
    "insertion_sphere",
    "insertion_sphere_size",
    "max_deletion_sphere_size",
    "deletion_sphere_bounds",
    "fll_ball",
    "fll_ball_members",
    "variable_length_ball",
]

# above this many words the distance-filter path is refused unless forced
FILTER_LIMIT = 1 << 24


@dataclass(frozen=True)
class BallReport:
    center: Word
    radius: int
    enumerated_size: int
    formula_size: Optional[int] = None
    members: Optional[tuple[Word, ...]] = None


def _same_alphabet(x: Word, y: Word) -> None:
    if x.q != y.q:
        raise DomainError(f"alphabet mismatch: q={x.q} vs q={y.q}")


def _same_length(x: Word, y: Word) -> None:
    _same_alphabet(x, y)
    if len(x) != len(y):
        raise DomainError(f"length mismatch: {len(x)} vs {len(y)}")


def lcs_length(x: Word, y: Word) -> int:
    """Longest common subsequence length, two-row dynamic program."""
    _same_alphabet(x, y)
    return kernels.lcs_length(x.symbols, y.symbols)


def fll_distance(x: Word, y: Word) -> int:
    _same_length(x, y)
    return len(x) - lcs_length(x, y)


def levenshtein_distance(x: Word, y: Word) -> int:
    """Insertion/deletion distance between words of any lengths."""
    _same_alphabet(x, y)
    return len(x) + len(y) - 2 * lcs_length(x, y)


def hamming_distance(x: Word, y: Word) -> int:
    _same_length(x, y)
    return sum(1 for a, b in zip(x.symbols, y.symbols) if a != b)


def hamming_ball_size(n: int, q: int, t: int) -> int:
    if not 0 <= t <= n:
        raise DomainError(f"need 0 <= t <= n, got t={t}, n={n}")
    return sum(comb(n, i) * (q - 1) ** i for i in range(t + 1))


def _delete_once(words: Iterable[tuple[int, ...]]) -> set[tuple[int, ...]]:
    return {w[:i] + w[i + 1:] for w in words for i in range(len(w))}


def _insert_once(words: Iterable[tuple[int, ...]], q: int) -> set[tuple[int, ...]]:
    return {w[:i] + (a,) + w[i:] for w in words for i in range(len(w) + 1) for a in range(q)}


def _deletions(syms: Iterable[tuple[int, ...]], t: int) -> set[tuple[int, ...]]:
    level = set(syms)
    for _ in range(t):
        level = _delete_once(level)
    return level


def _insertions(syms: Iterable[tuple[int, ...]], q: int, t: int) -> set[tuple[int, ...]]:
    level = set(syms)
    for _ in range(t):
        level = _insert_once(level, q)
    return level


def deletion_sphere(w: Word, t: int) -> frozenset[Word]:
    """All distinct words obtained from w by exactly t deletions."""
    if not 0 <= t <= len(w):
        raise DomainError(f"need 0 <= t <= n, got t={t}, n={len(w)}")
    return frozenset(Word(w.q, s) for s in _deletions([w.symbols], t))


def insertion_sphere(w: Word, t: int) -> frozenset[Word]:
    if t < 0:
        raise DomainError("t must be non-negative")
    return frozenset(Word(w.q, s) for s in _insertions([w.symbols], w.q, t))


def insertion_sphere_size(n: int, q: int, t: int) -> int:
    if t < 0 or n < 0:
        raise DomainError("n and t must be non-negative")
    return sum(comb(n + t, i) * (q - 1) ** i for i in range(t + 1))


def max_deletion_sphere_size(n: int, q: int, t: int) -> int:
    """Largest deletion t-sphere in Z_q^n, by the recursion on the alphabet size.

    D_1(n, t) = 1 and D_q(n, t) = sum_i C(n-t, i) D_{q-1}(t, t-i).
    """
    if q < 2 or not 0 <= t <= n:
        raise DomainError(f"need q >= 2 and 0 <= t <= n, got n={n}, q={q}, t={t}")
    return _max_del(n, q, t)


def _max_del(n: int, q: int, t: int) -> int:
    if q == 1:
        return 1
    return sum(comb(n - t, i) * _max_del(t, q - 1, t - i) for i in range(t + 1))


def binary_max_deletion_recursive(n: int, t: int) -> int:
    """D_2(n, t) through D_2(n, t) = D_2(n-1, t) + D_2(n-2, t-1).

    Base cases (t = 0 or n = t) use the closed sum.
    """
    if not 0 <= t <= n:
        raise DomainError(f"need 0 <= t <= n, got t={t}, n={n}")
    memo: dict[tuple[int, int], int] = {}

    def rec(m: int, s: int) -> int:
        if s == 0 or m <= s:
            return sum(comb(m - s, i) for i in range(s + 1))
        key = (m, s)
        if key not in memo:
            memo[key] = rec(m - 1, s) + rec(m - 2, s - 1)
        return memo[key]

    return rec(n, t)


def deletion_sphere_bounds(w: Word, t: int) -> tuple[int, int]:
    """Lower and upper bounds on |D_t(w)| in terms of the run count."""
    rho = runs(w)
    if not 0 <= t <= rho:
        raise DomainError(f"bounds need 0 <= t <= runs = {rho}, got t={t}")
    lower = sum(comb(rho - t, i) for i in range(t + 1))
    upper = comb(rho + t - 1, t)
    return lower, upper


def _ball_by_filter(w: Word, t: int) -> set[Word]:
    n, q = len(w), w.q
    if q**n > FILTER_LIMIT:
        raise DomainError(f"distance filter over {q}^{n} words is too large")
    return {y for y in all_words(n, q) if len(w) - lcs_length(w, y) <= t}


def fll_ball_members(w: Word, t: int, method: str = "compose") -> frozenset[Word]:
    """Words at FLL distance at most t from w.

    ``method="compose"`` builds I_t(D_t(w)); ``method="filter"`` scans Z_q^n
    and keeps words within distance t. Both return the same set.
    """
    if not 0 <= t <= len(w):
        raise DomainError(f"need 0 <= t <= n, got t={t}, n={len(w)}")
    if method == "filter":
        return frozenset(_ball_by_filter(w, t))
    if method != "compose":
        raise DomainError(f"unknown ball method {method!r}")
    syms = _insertions(_deletions([w.symbols], t), w.q, t)
    return frozenset(Word(w.q, s) for s in syms)


def fll_ball(w: Word, t: int, method: str = "compose", with_members: bool = False) -> BallReport:
    if method == "kernel" and not with_members:
        if not 0 <= t <= len(w):
            raise DomainError(f"need 0 <= t <= n, got t={t}, n={len(w)}")
        size = kernels.ball_size(w.symbols, w.q, t)
        members = None
    else:
        ball = fll_ball_members(w, t, "compose" if method == "kernel" else method)
        size = len(ball)
        members = tuple(sorted(ball)) if with_members else None
    formula = None
    if t == 0:
        formula = 1
    elif t == 1:
        formula = kernels.l1_size(w.symbols, w.q)
    return BallReport(w, t, size, formula, members)


def variable_length_ball(w: Word, t: int) -> frozenset[Word]:
    """Levenshtein ball over words of all lengths, radius 1 or 2.

    Built from spheres: radius 1 is D_1 + I_1 + {w}; radius 2 is
    L_1 + D_2 + I_2 + D_1 + I_1. Components have distinct lengths, so the
    union is disjoint.
    """
    if t not in (1, 2):
        raise UnsupportedRadiusError(f"variable-length ball supports radius 1 or 2, got {t}")
    n = len(w)
    parts: list[frozenset[Word]] = [insertion_sphere(w, 1)]
    if n >= 1:
        parts.append(deletion_sphere(w, 1))
    if t == 1:
        parts.append(frozenset([w]))
    else:
        parts.append(fll_ball_members(w, 1) if n >= 1 else frozenset([w]))
        parts.append(insertion_sphere(w, 2))
        if n >= 2:
            parts.append(deletion_sphere(w, 2))
    return frozenset().union(*parts)
