"""Words over Z_q and their run / alternating-segment statistics."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DomainError

__all__ = [
    "Word",
    "SegmentProfile",
    "all_words",
    "runs",
    "alternating_profile",
    "difference_vector",
    "zeros",
    "make_constant",
    "make_alternating",
    "make_cyclic",
    "make_balanced",
    "word_from_profile",
    "is_balanced",
    "balanced_words",
]


@dataclass(frozen=True, order=True)
class Word:
    """A fixed-length sequence over the alphabet {0, ..., q-1}.

    Ordering is lexicographic on the symbols (words of one alphabet only).
    """

    q: int
    symbols: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        if self.q < 2:
            raise DomainError(f"alphabet size must be >= 2, got {self.q}")
        for s in self.symbols:
            if not 0 <= s < self.q:
                raise DomainError(f"symbol {s} outside Z_{self.q}")

    @classmethod
    def parse(cls, text: str, q: int = 2) -> "Word":
        """Parse a digit string (q <= 10) or comma-separated integers."""
        text = text.strip()
        if "," in text or q > 10:
            parts = [p for p in text.split(",") if p.strip()]
            try:
                syms = tuple(int(p) for p in parts)
            except ValueError:
                raise DomainError(f"cannot parse word {text!r}") from None
        else:
            if text and not text.isdigit():
                raise DomainError(f"cannot parse word {text!r}")
            syms = tuple(int(c) for c in text)
        return cls(q, syms)

    @classmethod
    def from_rank(cls, rank: int, n: int, q: int) -> "Word":
        """Inverse of :meth:`rank`: mixed-radix decoding, first symbol most significant."""
        if not 0 <= rank < q**n:
            raise DomainError(f"rank {rank} outside [0, {q}^{n})")
        out = [0] * n
        for i in range(n - 1, -1, -1):
            rank, out[i] = divmod(rank, q)
        return cls(q, tuple(out))

    def rank(self) -> int:
        r = 0
        for s in self.symbols:
            r = r * self.q + s
        return r

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.q, self.symbols[item])
        return self.symbols[item]

    def __str__(self) -> str:
        if self.q <= 10:
            return "".join(map(str, self.symbols))
        return ",".join(map(str, self.symbols))

    def __repr__(self) -> str:
        return f"Word({str(self)!r}, q={self.q})"

    @property
    def n(self) -> int:
        return len(self.symbols)

    def weight(self) -> int:
        return sum(1 for s in self.symbols if s)


def all_words(n: int, q: int) -> Iterator[Word]:
    """Every word of Z_q^n in lexicographic (mixed-radix) order."""
    for syms in itertools.product(range(q), repeat=n):
        yield Word(q, syms)


@dataclass(frozen=True)
class SegmentProfile:
    """Run count, maximal alternating segment lengths and Zeros(x')."""

    n: int
    runs: int
    segment_lengths: tuple[int, ...]
    zeros_of_diff: int

    @property
    def A(self) -> int:
        return len(self.segment_lengths)

    @property
    def overlap(self) -> int:
        """Number of positions covered by two segments (zero for binary words)."""
        return sum(self.segment_lengths) - self.n


def _require_nonempty(w: Word) -> None:
    if len(w) == 0:
        raise DomainError("operation undefined on the empty word")


def runs(w: Word) -> int:
    """Number of maximal runs of identical symbols."""
    _require_nonempty(w)
    x = w.symbols
    return 1 + sum(1 for i in range(1, len(x)) if x[i] != x[i - 1])


def difference_vector(w: Word) -> Word:
    _require_nonempty(w)
    x, q = w.symbols, w.q
    return Word(q, tuple((x[i + 1] - x[i]) % q for i in range(len(x) - 1)))


def zeros(w: Word) -> int:
    return sum(1 for s in w.symbols if s == 0)


def _segment_ends(x: Sequence[int]) -> list[int]:
    # ends[i] = last index j such that x[i..j] alternates over two symbols
    n = len(x)
    ends = [0] * n
    ends[n - 1] = n - 1
    for i in range(n - 2, -1, -1):
        if x[i] == x[i + 1]:
            ends[i] = i
        elif i + 2 < n and x[i + 2] == x[i] and ends[i + 1] >= i + 2:
            ends[i] = ends[i + 1]
        else:
            ends[i] = i + 1
    return ends


def segment_bounds(w: Word) -> list[tuple[int, int]]:
    """Inclusive (start, end) index pairs of the maximal alternating segments."""
    _require_nonempty(w)
    ends = _segment_ends(w.symbols)
    out = [(0, ends[0])]
    for i in range(1, len(ends)):
        # x[i..e] is maximal iff it cannot be extended to the left
        if ends[i] > ends[i - 1]:
            out.append((i, ends[i]))
    return out


def alternating_profile(w: Word) -> SegmentProfile:
    lengths = tuple(e - s + 1 for s, e in segment_bounds(w))
    return SegmentProfile(
        n=len(w),
        runs=runs(w),
        segment_lengths=lengths,
        zeros_of_diff=zeros(difference_vector(w)),
    )


def make_constant(symbol: int, n: int, q: int = 2) -> Word:
    return Word(q, (symbol,) * n)


def make_alternating(a: int, b: int, n: int, q: int = 2) -> Word:
    if a == b:
        raise DomainError("alternating word needs two distinct symbols")
    return Word(q, tuple(a if i % 2 == 0 else b for i in range(n)))


def make_cyclic(n: int, q: int) -> Word:
    """The word c(n) = 0 1 ... q-1 0 1 ... of length n."""
    return Word(q, tuple(i % q for i in range(n)))


def word_from_profile(lengths: Sequence[int], first: int = 0) -> Word:
    """Binary word with the given alternating-segments profile.

    Each new segment starts by repeating the previous symbol, which is what
    makes the segments maximal.
    """
    if first not in (0, 1) or any(s < 1 for s in lengths):
        raise DomainError("invalid binary profile")
    out: list[int] = []
    cur = first
    for s in lengths:
        for j in range(s):
            out.append(cur if j % 2 == 0 else 1 - cur)
        cur = out[-1]
    return Word(2, tuple(out))


def _balanced_shape(n: int, alpha: int) -> tuple[int, int]:
    if not 1 <= alpha <= n:
        raise DomainError(f"need 1 <= alpha <= n, got alpha={alpha}, n={n}")
    c = -(-n // alpha)
    k = n - alpha * (c - 1)  # 1 <= k <= alpha, equals alpha when alpha | n
    return c, k


def make_balanced(n: int, alpha: int) -> Word:
    """Canonical alpha-balanced word: the k long segments first, starting with 0."""
    c, k = _balanced_shape(n, alpha)
    return word_from_profile([c] * k + [c - 1] * (alpha - k))


def is_balanced(w: Word, alpha: int) -> bool:
    if w.q != 2 or not 1 <= alpha <= len(w):
        return False
    c = -(-len(w) // alpha)
    prof = alternating_profile(w)
    return prof.A == alpha and all(s in (c, c - 1) for s in prof.segment_lengths)


def balanced_words(n: int, alpha: int) -> Iterator[Word]:
    """All alpha-balanced binary words of length n (each arrangement, both start symbols)."""
    c, k = _balanced_shape(n, alpha)
    for long_pos in itertools.combinations(range(alpha), k):
        chosen = set(long_pos)
        lengths = [c if i in chosen else c - 1 for i in range(alpha)]
        for first in (0, 1):
            yield word_from_profile(lengths, first)
