"""Minimum and maximum FLL ball sizes.

The radius-1 ball size is a closed function of the run count and the
maximal alternating segment lengths; the extremal results below optimise it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .errors import DomainError
from .metric import hamming_ball_size
from .words import (
    Word,
    alternating_profile,
    balanced_words,
    is_balanced,
    make_constant,
    make_cyclic,
    runs,
)

__all__ = [
    "ExtremalResult",
    "l1_size_formula",
    "min_ball_size",
    "max_ball_nonbinary",
    "is_nonbinary_max_center",
    "balanced_ball_size",
    "balanced_ball_diff",
    "optimal_alpha_set",
    "alpha_window",
    "max_ball_binary",
    "max_ball_binary_asymptotic",
]


@dataclass(frozen=True)
class ExtremalResult:
    n: int
    q: int
    kind: str  # "min" or "max"
    size: int
    alpha_set: Optional[frozenset[int]] = None
    k: Optional[dict[int, int]] = None  # alpha -> k, binary max only
    witnesses: tuple[Word, ...] = ()
    is_witness: Optional[Callable[[Word], bool]] = field(default=None, compare=False, repr=False)

    def iter_witnesses(self) -> Iterator[Word]:
        """Every extremal center (binary max: all alpha-balanced words)."""
        if self.kind == "max" and self.q == 2 and self.alpha_set:
            for a in sorted(self.alpha_set):
                yield from balanced_words(self.n, a)
        else:
            yield from self.witnesses


def l1_size_formula(w: Word) -> int:
    """|L_1(w)| = rho (n(q-1) - 1) + 2 - sum_i (s_i - 1)(s_i - 2) / 2."""
    prof = alternating_profile(w)
    n, q = len(w), w.q
    # each (s-1)(s-2) is a product of consecutive integers, so the sum is even
    penalty = sum((s - 1) * (s - 2) for s in prof.segment_lengths)
    return prof.runs * (n * (q - 1) - 1) + 2 - penalty // 2


def min_ball_size(n: int, q: int, t: int) -> ExtremalResult:
    if q < 2 or not 0 <= t < n:
        raise DomainError(f"minimum ball needs n > t >= 0 and q >= 2 (n={n}, q={q}, t={t})")
    witnesses = tuple(make_constant(s, n, q) for s in range(q))
    return ExtremalResult(
        n, q, "min", hamming_ball_size(n, q, t), witnesses=witnesses,
        is_witness=lambda w: len(set(w.symbols)) == 1,
    )


def is_nonbinary_max_center(w: Word) -> bool:
    """Runs all have length 1 and x_i != x_{i+2} everywhere."""
    x = w.symbols
    return (
        len(x) > 0
        and runs(w) == len(x)
        and all(x[i] != x[i + 2] for i in range(len(x) - 2))
    )


def max_ball_nonbinary(n: int, q: int) -> ExtremalResult:
    if q == 2:
        raise DomainError("binary alphabet: use max_ball_binary")
    if q < 2 or n < 1:
        raise DomainError(f"need q > 2 and n >= 1 (n={n}, q={q})")
    return ExtremalResult(
        n, q, "max", n * n * (q - 1) - n + 2,
        witnesses=(make_cyclic(n, q),), is_witness=is_nonbinary_max_center,
    )


def _c_and_k(n: int, alpha: int) -> tuple[int, int]:
    if not 1 <= alpha <= n:
        raise DomainError(f"need 1 <= alpha <= n, got alpha={alpha}, n={n}")
    c = -(-n // alpha)
    return c, n - alpha * (c - 1)


def balanced_ball_size(n: int, alpha: int) -> int:
    """Radius-1 ball size of any alpha-balanced binary word of length n."""
    c, k = _c_and_k(n, alpha)
    penalty = k * (c - 1) * (c - 2) + (alpha - k) * (c - 2) * (c - 3)
    return (n + 1 - alpha) * (n - 1) + 2 - penalty // 2


def balanced_ball_diff(n: int, alpha: int) -> int:
    if alpha < 2 or alpha > n:
        raise DomainError(f"need 2 <= alpha <= n, got alpha={alpha}, n={n}")
    return balanced_ball_size(n, alpha) - balanced_ball_size(n, alpha - 1)


def optimal_alpha_set(n: int) -> frozenset[int]:
    """Integers nearest to sqrt(1 + 2n) / 2, decided in exact integer arithmetic.

    The nearest integer is the largest alpha with (2 alpha - 1)^2 <= 1 + 2n;
    equality means sqrt(1 + 2n)/2 is a half-integer and alpha - 1 ties.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    m = 1 + 2 * n
    r = math.isqrt(m)
    alpha = (r + 1) // 2  # largest alpha with 2 alpha - 1 <= r
    if (2 * alpha - 1) ** 2 == m and alpha > 1:
        return frozenset({alpha - 1, alpha})
    return frozenset({alpha})


def alpha_window(n: int) -> frozenset[int]:
    """All alpha in [1, n] with 2 alpha (alpha + 1) >= n >= 2 (alpha - 1) alpha."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    return frozenset(
        a for a in range(1, n + 1) if 2 * a * (a + 1) >= n >= 2 * (a - 1) * a
    )


def max_ball_binary(n: int) -> ExtremalResult:
    alphas = optimal_alpha_set(n)
    sizes = {a: balanced_ball_size(n, a) for a in alphas}
    if len(set(sizes.values())) != 1:
        raise AssertionError(f"tied alphas disagree on ball size at n={n}: {sizes}")
    alpha = min(alphas)
    c, k = _c_and_k(n, alpha)
    closed = (
        n * n - n * alpha + alpha + 1
        - (k * (c - 1) * (c - 2) + (alpha - k) * (c - 2) * (c - 3)) // 2
    )
    if closed != sizes[alpha]:
        raise AssertionError(f"closed form {closed} != balanced size {sizes[alpha]} at n={n}")
    return ExtremalResult(
        n, 2, "max", closed,
        alpha_set=alphas,
        k={a: _c_and_k(n, a)[1] for a in alphas},
        is_witness=lambda w: any(is_balanced(w, a) for a in alphas),
    )


def max_ball_binary_asymptotic(n: int) -> float:
    return n * n - math.sqrt(2) * n**1.5
