"""Expected radius-1 ball size over Z_q^n, in exact rational arithmetic.

Closed forms are evaluated next to exact values so the difference between
them can be reported rather than hidden.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .errors import DomainError
from .words import all_words, alternating_profile, segment_bounds

__all__ = [
    "ExpectedStats",
    "chi",
    "chi_breakdown",
    "count_segments",
    "classify_segments",
    "expected_stats",
    "enumerated_stats",
    "average_ball_closed",
    "average_ball_enumerated",
    "average_ball_decomposed",
    "average_ball_size",
]

# full enumeration of Z_q^n is used for the exact average up to this many words
ENUM_LIMIT = 1 << 20


def _check(n: int, q: int) -> None:
    if q < 2 or n < 1:
        raise DomainError(f"need n >= 1 and q >= 2, got n={n}, q={q}")


def chi(s: int, n: int, q: int) -> int:
    """Number of maximal alternating segments of length s, summed over Z_q^n."""
    if n < 2 or q < 2:
        raise DomainError(f"chi needs n >= 2 and q >= 2, got n={n}, q={q}")
    if not 1 <= s <= n:
        raise DomainError(f"segment length {s} outside [1, {n}]")
    if s == 1:
        return 2 * q ** (n - 1) + (n - 2) * q ** (n - 2)
    if s == n:
        return q * (q - 1)
    return 2 * (q - 1) ** 2 * q ** (n - s) + (n - s - 1) * (q - 1) ** 3 * q ** (n - s - 1)


def chi_breakdown(s: int, n: int, q: int) -> tuple[int, int, int, int]:
    """Counts split by overlap: (neither side, both sides, only next, only previous)."""
    if q < 2 or not 2 <= s <= n - 1:
        raise DomainError(f"breakdown needs 2 <= s <= n-1, got s={s}, n={n}")
    m = n - s - 1
    chi1 = 2 * (q - 1) * q ** (n - s) + m * (q - 1) * q ** (m)
    chi2 = m * (q - 1) * (q - 2) ** 2 * q**m
    chi3 = (q - 1) * (q - 2) * q ** (n - s) + (q - 1) * (q - 2) * m * q**m
    return chi1, chi2, chi3, chi3


def count_segments(n: int, q: int) -> Counter:
    """Direct count of segment lengths over all of Z_q^n (enumeration oracle)."""
    _check(n, q)
    counts: Counter = Counter()
    for w in all_words(n, q):
        counts.update(e - b + 1 for b, e in segment_bounds(w))
    return counts


def classify_segments(n: int, q: int) -> dict[int, list[int]]:
    """Direct per-length counts of segments in the four overlap classes."""
    _check(n, q)
    out: dict[int, list[int]] = {}
    for w in all_words(n, q):
        bounds = segment_bounds(w)
        for i, (b, e) in enumerate(bounds):
            prev = i > 0 and bounds[i - 1][1] >= b
            succ = i + 1 < len(bounds) and bounds[i + 1][0] <= e
            cls = {(False, False): 0, (True, True): 1, (False, True): 2, (True, False): 3}[(prev, succ)]
            out.setdefault(e - b + 1, [0, 0, 0, 0])[cls] += 1
    return out


@dataclass(frozen=True)
class ExpectedStats:
    n: int
    q: int
    e_runs: Fraction
    e_segments: Fraction
    e_sum_s: Fraction
    e_sum_s_exact: Fraction
    e_sum_s2_closed: Fraction
    e_sum_s2_exact: Fraction
    avg_ball_closed: Fraction
    avg_ball_exact: Fraction

    @property
    def sum_s2_delta(self) -> Fraction:
        return self.e_sum_s2_exact - self.e_sum_s2_closed

    @property
    def avg_ball_delta(self) -> Fraction:
        return self.avg_ball_closed - self.avg_ball_exact


def _e_runs(n: int, q: int) -> Fraction:
    return n - Fraction(n - 1, q)


def _e_sum_s(n: int, q: int) -> Fraction:
    return n + Fraction((n - 2) * (q - 1) * (q - 2), q * q)


def _e_segments(n: int, q: int) -> Fraction:
    return 1 + Fraction((n - 2) * (q - 1) * (q - 2), q * q) + Fraction(n - 1, q)


def _e_sum_s2_closed(n: int, q: int) -> Fraction:
    qf = Fraction(q)
    return (
        n * (4 * qf * qf - 3 * qf + 2) / (qf * qf)
        + (6 * qf - 4) / (qf * qf)
        - 4
        - 2 / (qf - 1) * (1 - 1 / qf**n)
    )


def average_ball_closed(n: int, q: int) -> Fraction:
    """Closed-form expression for the average radius-1 ball size (see average_ball_size for the exact value)."""
    _check(n, q)
    qf = Fraction(q)
    return (
        n * n * (qf + 1 / qf - 2)
        - n / qf
        - (qf - 1) * (qf - 2) / (qf * qf)
        + 3
        - 3 / qf
        + 2 / (qf * qf)
        + (qf**n - 1) / (qf**n * (qf - 1))
    )


def _chi_moment(n: int, q: int, power: int) -> Fraction:
    return Fraction(sum(s**power * chi(s, n, q) for s in range(1, n + 1)), q**n)


def expected_stats(n: int, q: int) -> ExpectedStats:
    _check(n, q)
    if n == 1:
        one = Fraction(1)
        return ExpectedStats(
            1, q, one, one, one, one, _e_sum_s2_closed(1, q), one,
            average_ball_closed(1, q), Fraction(q),
        )
    e_runs = _e_runs(n, q)
    e_seg = _e_segments(n, q)
    e_s = _e_sum_s(n, q)
    e_s2 = _chi_moment(n, q, 2)
    exact = (n * q - n - 1) * e_runs + 2 - e_s2 / 2 + Fraction(3, 2) * e_s - e_seg
    return ExpectedStats(
        n, q,
        e_runs=e_runs,
        e_segments=e_seg,
        e_sum_s=e_s,
        e_sum_s_exact=_chi_moment(n, q, 1),
        e_sum_s2_closed=_e_sum_s2_closed(n, q),
        e_sum_s2_exact=e_s2,
        avg_ball_closed=average_ball_closed(n, q),
        avg_ball_exact=exact,
    )


def enumerated_stats(n: int, q: int) -> dict[str, Fraction]:
    """E[rho], E[A], E[sum s], E[sum s^2], E[Zeros(x')] by walking all of Z_q^n."""
    _check(n, q)
    tot = Counter()
    for w in all_words(n, q):
        p = alternating_profile(w)
        tot["runs"] += p.runs
        tot["segments"] += p.A
        tot["sum_s"] += sum(p.segment_lengths)
        tot["sum_s2"] += sum(s * s for s in p.segment_lengths)
        tot["zeros"] += p.zeros_of_diff
    return {k: Fraction(v, q**n) for k, v in tot.items()}


def average_ball_enumerated(n: int, q: int) -> Fraction:
    """Exact average of the per-word radius-1 size over every word of Z_q^n."""
    _check(n, q)
    total = kernels.sweep_range(n, q, 1, 0, q**n, kernels.MODE_FORMULA, 0)[6]
    return Fraction(total, q**n)


def average_ball_decomposed(n: int, q: int) -> Fraction:
    """Exact average through expectations of runs and segment statistics."""
    return expected_stats(n, q).avg_ball_exact


def average_ball_size(n: int, q: int) -> tuple[Fraction, Fraction]:
    """(closed form, exact value). Exact uses enumeration when q^n is small."""
    _check(n, q)
    if q**n <= ENUM_LIMIT:
        exact = average_ball_enumerated(n, q)
    else:
        exact = average_ball_decomposed(n, q)
    return average_ball_closed(n, q), exact
