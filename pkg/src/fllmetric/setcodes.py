"""Anticodes of small diameter and deletion/insertion-correcting code predicates."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from .errors import DomainError, ResourceGuardError
from .metric import fll_ball_members, fll_distance
from .words import Word, make_constant

__all__ = [
    "WordSet",
    "AnticodeSearchResult",
    "HarnessReport",
    "diameter",
    "is_anticode",
    "is_maximal_anticode",
    "maximal_cliques",
    "search_maximal_anticodes",
    "extremal_anticodes",
    "puncture",
    "min_distance",
    "is_deletion_correcting",
    "is_insertion_correcting",
    "is_di_correcting",
    "equivalence_harness",
]

SEARCH_GUARD = 1 << 14


@dataclass(frozen=True)
class WordSet:
    n: int
    q: int
    words: frozenset[Word]

    def __post_init__(self):
        if not isinstance(self.words, frozenset):
            object.__setattr__(self, "words", frozenset(self.words))
        for w in self.words:
            if len(w) != self.n or w.q != self.q:
                raise DomainError(f"word {w} is not in Z_{self.q}^{self.n}")

    @classmethod
    def of(cls, words: Iterable[Word]) -> "WordSet":
        words = frozenset(words)
        if not words:
            raise DomainError("cannot infer n and q from an empty word list")
        w0 = next(iter(words))
        return cls(len(w0), w0.q, words)

    @classmethod
    def parse(cls, text: str) -> "WordSet":
        """Read the ``n=<n> q=<q>`` header followed by one word per line."""
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        if not lines:
            raise DomainError("empty word-set file")
        try:
            fields = dict(tok.split("=", 1) for tok in lines[0].split())
            n, q = int(fields["n"]), int(fields["q"])
        except (KeyError, ValueError):
            raise DomainError(f"bad word-set header {lines[0]!r}; expected 'n=<n> q=<q>'") from None
        return cls(n, q, frozenset(Word.parse(ln, q) for ln in lines[1:]))

    def dumps(self) -> str:
        body = "\n".join(str(w) for w in self.sorted())
        return f"n={self.n} q={self.q}\n" + (body + "\n" if body else "")

    def sorted(self) -> list[Word]:
        return sorted(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.sorted())

    def __contains__(self, w) -> bool:
        return w in self.words


def _as_set(S) -> WordSet:
    return S if isinstance(S, WordSet) else WordSet.of(S)


def diameter(S) -> int:
    S = _as_set(S)
    if not S.words:
        raise DomainError("diameter of an empty set is undefined")
    ws = S.sorted()
    return max((fll_distance(a, b) for a, b in itertools.combinations(ws, 2)), default=0)


def is_anticode(S, D: int) -> bool:
    return diameter(S) <= D


def is_maximal_anticode(S, D: int = 1) -> bool:
    """True iff no word outside S lies within distance D of every word of S."""
    S = _as_set(S)
    if diameter(S) > D:
        raise DomainError(f"set has diameter {diameter(S)} > {D}")
    ws = S.sorted()
    # any addable word must be in the D-ball of the first member
    for y in fll_ball_members(ws[0], min(D, S.n)):
        if y in S.words:
            continue
        if all(fll_distance(y, w) <= D for w in ws[1:]):
            return False
    return True


def maximal_cliques(adj: list[int]) -> list[int]:
    """All maximal cliques of a graph given as neighbour bitmasks (pivoting Bron-Kerbosch).

    Cliques are returned as vertex bitmasks, sorted.
    """
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        # pivot: vertex of P | X with the most neighbours in P
        best, pivot = -1, 0
        px = p | x
        while px:
            u = (px & -px).bit_length() - 1
            px &= px - 1
            c = bin(p & adj[u]).count("1")
            if c > best:
                best, pivot = c, u
        cand = p & ~adj[pivot]
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    expand(0, (1 << len(adj)) - 1, 0)
    return sorted(out)


@dataclass(frozen=True)
class AnticodeSearchResult:
    n: int
    q: int
    diameter: int
    max_size: int
    min_size: int
    max_witnesses: tuple[WordSet, ...]
    min_witnesses: tuple[WordSet, ...]
    total_maximal: int
    all_maximal: tuple[WordSet, ...] = field(default=(), repr=False)


def distance_graph(n: int, q: int, D: int = 1) -> tuple[list[Word], list[int]]:
    """Words of Z_q^n in rank order and neighbour bitmasks for distance 1..D."""
    words = [Word.from_rank(r, n, q) for r in range(q**n)]
    adj = []
    for i, w in enumerate(words):
        mask = 0
        for y in fll_ball_members(w, min(D, n)):
            mask |= 1 << y.rank()
        adj.append(mask & ~(1 << i))
    return words, adj


def search_maximal_anticodes(n: int, q: int, D: int = 1, guard: int = SEARCH_GUARD) -> AnticodeSearchResult:
    """Enumerate every maximal anticode of diameter D in Z_q^n as a maximal clique."""
    if n < 1 or q < 2 or D < 0:
        raise DomainError(f"invalid search parameters n={n}, q={q}, D={D}")
    if q**n > guard:
        raise ResourceGuardError(q**n, guard, "word space")
    words, adj = distance_graph(n, q, D)
    sets = []
    for mask in maximal_cliques(adj):
        members = [words[i] for i in range(len(words)) if mask >> i & 1]
        sets.append(WordSet(n, q, frozenset(members)))
    sizes = [len(s) for s in sets]
    hi, lo = max(sizes), min(sizes)
    return AnticodeSearchResult(
        n, q, D, hi, lo,
        max_witnesses=tuple(s for s in sets if len(s) == hi),
        min_witnesses=tuple(s for s in sets if len(s) == lo),
        total_maximal=len(sets),
        all_maximal=tuple(sets),
    )


def extremal_anticodes(n: int) -> tuple[WordSet, WordSet]:
    """Binary maximal anticodes of diameter 1 of size n + 1 and of size 4."""
    if n < 3:
        raise DomainError(f"constructions need n >= 3, got {n}")
    zero = make_constant(0, n)
    large = {zero} | {Word(2, tuple(int(j == i) for j in range(n))) for i in range(n)}
    pad = (0,) * (n - 3)
    small = {Word(2, pad + tuple(int(b) for b in f"{v:03b}")) for v in (2, 3, 5, 6)}
    out = WordSet(n, 2, frozenset(large)), WordSet(n, 2, frozenset(small))
    for s in out:
        if not is_maximal_anticode(s, 1):
            raise AssertionError(f"construction is not a maximal anticode: {s.sorted()}")
    return out


def puncture(S) -> WordSet:
    """Drop the last coordinate of every word."""
    S = _as_set(S)
    if S.n < 2:
        raise DomainError("puncturing needs n >= 2")
    return WordSet(S.n - 1, S.q, frozenset(w[:-1] for w in S.words))


# --- correcting-code predicates ---------------------------------------------

@lru_cache(maxsize=1 << 16)
def _di_ball(symbols: tuple[int, ...], q: int, t1: int, t2: int) -> frozenset[tuple[int, ...]]:
    level = {symbols}
    for _ in range(t1):
        level = {w[:i] + w[i + 1:] for w in level for i in range(len(w))}
    for _ in range(t2):
        level = {w[:i] + (a,) + w[i:] for w in level for i in range(len(w) + 1) for a in range(q)}
    return frozenset(level)


def _pairwise_disjoint(C: WordSet, t1: int, t2: int) -> bool:
    balls = [_di_ball(w.symbols, C.q, t1, t2) for w in C.sorted()]
    return all(a.isdisjoint(b) for a, b in itertools.combinations(balls, 2))


def _check_t(C: WordSet, t: int, what: str) -> None:
    if t < 0 or t > C.n:
        raise DomainError(f"{what} needs 0 <= t <= n, got t={t}, n={C.n}")


def is_deletion_correcting(C, t: int) -> bool:
    C = _as_set(C)
    _check_t(C, t, "deletion correction")
    return _pairwise_disjoint(C, t, 0)


def is_insertion_correcting(C, t: int) -> bool:
    C = _as_set(C)
    if t < 0:
        raise DomainError("t must be non-negative")
    return _pairwise_disjoint(C, 0, t)


def is_di_correcting(C, t1: int, t2: int) -> bool:
    """Pairwise-disjoint sets of words reachable by t1 deletions then t2 insertions."""
    C = _as_set(C)
    _check_t(C, t1, "deletion-insertion correction")
    if t2 < 0:
        raise DomainError("t2 must be non-negative")
    return _pairwise_disjoint(C, t1, t2)


def min_distance(C) -> Optional[int]:
    C = _as_set(C)
    ws = C.sorted()
    return min((fll_distance(a, b) for a, b in itertools.combinations(ws, 2)), default=None)


def _ball(symbols: tuple[int, ...], q: int, t: int) -> frozenset[tuple[int, ...]]:
    return _di_ball(symbols, q, t, t)


def corrects_and_detects(C, t: int) -> bool:
    """Corrects t FLL errors and detects exactly t + 1 of them.

    Correction: the (t, t) deletion-insertion balls are pairwise disjoint.
    Detection: no word at distance exactly t + 1 from one codeword lies
    within distance t of another.
    """
    C = _as_set(C)
    if not is_di_correcting(C, t, t):
        return False
    ws = C.sorted()
    for a, b in itertools.permutations(ws, 2):
        shell = _ball(a.symbols, C.q, t + 1) - _ball(a.symbols, C.q, t)
        if not shell.isdisjoint(_ball(b.symbols, C.q, t)):
            return False
    return True


@dataclass(frozen=True)
class HarnessReport:
    t1: int
    t2: int
    statements: dict[str, bool]

    @property
    def agree(self) -> bool:
        return len(set(self.statements.values())) <= 1


def equivalence_harness(C, t1: int, t2: int) -> HarnessReport:
    """Evaluate every equivalent characterisation of correcting t1 + t2 errors.

    All entries of ``statements`` must agree for any code; ``agree`` says
    whether they did.
    """
    C = _as_set(C)
    s = t1 + t2
    if t1 < 0 or t2 < 0 or s > C.n:
        raise DomainError(f"need t1, t2 >= 0 and t1 + t2 <= n, got ({t1}, {t2}), n={C.n}")
    d = min_distance(C)
    st = {
        "di": is_di_correcting(C, t1, t2),
        "deletion": is_deletion_correcting(C, s),
        "insertion": is_insertion_correcting(C, s),
        "all_splits": all(is_di_correcting(C, a, s - a) for a in range(s + 1)),
        "min_distance": d is None or d >= s + 1,
    }
    if s % 2 == 1:
        st["correct_and_detect"] = corrects_and_detects(C, (s - 1) // 2)
    return HarnessReport(t1, t2, st)
