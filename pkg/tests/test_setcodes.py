import itertools
import random

import networkx as nx
import pytest

from fllmetric.errors import DomainError, ResourceGuardError
from fllmetric.metric import fll_distance
from fllmetric.setcodes import (
    WordSet, diameter, distance_graph, equivalence_harness, extremal_anticodes,
    is_deletion_correcting, is_di_correcting, is_insertion_correcting, is_maximal_anticode,
    maximal_cliques, min_distance, puncture, search_maximal_anticodes,
)
from fllmetric.words import Word, all_words

N3_MAXIMAL = [
    {"000", "001", "010", "100"},
    {"001", "010", "100", "101"},
    {"001", "010", "011", "101"},
    {"010", "011", "101", "110"},
    {"011", "101", "110", "111"},
    {"010", "100", "101", "110"},
]


def S(*words, q=2):
    return WordSet.of(Word.parse(w, q) for w in words)


def test_diameter_examples():
    assert diameter(S("000", "001", "010", "100")) == 1
    assert diameter(S("0110")) == 0
    assert diameter(S("00", "11")) == 2
    with pytest.raises(DomainError):
        diameter(WordSet(2, 2, frozenset()))


def test_maximal_examples():
    for n in range(1, 8):
        light = WordSet.of(w for w in all_words(n, 2) if w.weight() <= 1)
        assert is_maximal_anticode(light, 1)
    assert not is_maximal_anticode(S("000"), 1)
    assert is_maximal_anticode(S("010", "100", "101", "110"), 1)
    with pytest.raises(DomainError):
        is_maximal_anticode(S("00", "11"), 1)


def test_wordset_serialization():
    ws = S("101", "000", "011")
    text = ws.dumps()
    assert text == "n=3 q=2\n000\n011\n101\n"
    assert WordSet.parse(text) == ws
    big = WordSet.of([Word(12, (11, 0)), Word(12, (3, 10))])
    assert WordSet.parse(big.dumps()) == big
    with pytest.raises(DomainError):
        WordSet.parse("bad header\n000\n")
    with pytest.raises(DomainError):
        WordSet(3, 2, frozenset({Word.parse("01")}))


def test_search_n3_matches_listed_sets():
    r = search_maximal_anticodes(3, 2)
    got = sorted(sorted(str(w) for w in s) for s in r.all_maximal)
    assert got == sorted(sorted(s) for s in N3_MAXIMAL)
    assert r.max_size == r.min_size == 4 and r.total_maximal == 6


@pytest.mark.parametrize("n", range(3, 8))
def test_search_binary_extremes(n):
    r = search_maximal_anticodes(n, 2)
    assert (r.max_size, r.min_size) == (n + 1, 4)
    for s in r.all_maximal:
        assert diameter(s) <= 1 and is_maximal_anticode(s, 1)


def test_search_nonbinary_conjecture():
    r = search_maximal_anticodes(3, 3)
    assert (r.max_size, r.min_size) == (7, 4)
    r = search_maximal_anticodes(4, 3)
    assert (r.max_size, r.min_size) == (9, 4)


def test_search_guard():
    with pytest.raises(ResourceGuardError):
        search_maximal_anticodes(15, 2)


@pytest.mark.parametrize("n,q", [(4, 2), (5, 2), (3, 3)])
def test_cliques_match_networkx(n, q):
    words, adj = distance_graph(n, q)
    g = nx.Graph()
    g.add_nodes_from(range(len(words)))
    for i, mask in enumerate(adj):
        g.add_edges_from((i, j) for j in range(len(words)) if mask >> j & 1)
    ours = {frozenset(i for i in range(len(words)) if m >> i & 1) for m in maximal_cliques(adj)}
    assert ours == {frozenset(c) for c in nx.find_cliques(g)}


def test_cliques_on_random_graphs():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(1, 14)
        g = nx.gnp_random_graph(n, rng.random(), seed=rng.randint(0, 10**6))
        adj = [sum(1 << j for j in g[i]) for i in range(n)]
        ours = {frozenset(i for i in range(n) if m >> i & 1) for m in maximal_cliques(adj)}
        assert ours == {frozenset(c) for c in nx.find_cliques(g)}


def test_extremal_constructions():
    large, small = extremal_anticodes(4)
    assert len(large) == 5
    assert {str(w) for w in small} == {"0010", "0011", "0101", "0110"}
    assert {str(w) for w in extremal_anticodes(3)[1]} == N3_MAXIMAL[3]
    for n in range(3, 11):
        large, small = extremal_anticodes(n)
        assert len(large) == n + 1 and len(small) == 4
        assert is_maximal_anticode(large, 1) and is_maximal_anticode(small, 1)
    with pytest.raises(DomainError):
        extremal_anticodes(2)


def test_puncture():
    assert puncture(S("000", "010")) == S("00", "01")
    with pytest.raises(DomainError):
        puncture(S("0", "1"))
    for n in range(3, 8):
        for s in search_maximal_anticodes(n, 2).all_maximal:
            for sub in (
                [w for w in s if w[-1] == 0], [w for w in s if w[-1] == 1],
                [w for w in s if tuple(w[-2:]) in ((0, 1), (1, 0))],
            ):
                if sub:
                    p = puncture(WordSet.of(sub))
                    assert len(p) == len(sub) and diameter(p) <= 1


def _suffix(w):
    return tuple(w[-2:].symbols)


@pytest.mark.parametrize("n", range(3, 8))
def test_suffix_properties(n):
    for s in search_maximal_anticodes(n, 2).all_maximal:
        counts = {}
        for w in s:
            counts[_suffix(w)] = counts.get(_suffix(w), 0) + 1
        c00, c01 = counts.get((0, 0), 0), counts.get((0, 1), 0)
        c11, c10 = counts.get((1, 1), 0), counts.get((1, 0), 0)
        if c00 >= 3:
            assert c01 <= 1
        if c01 >= 3:
            assert c00 <= 1
        # complement symmetry
        if c11 >= 3:
            assert c10 <= 1
        if c10 >= 3:
            assert c11 <= 1


def test_code_predicate_examples():
    assert is_deletion_correcting(S("00000", "11111"), 2)
    for t in range(4):
        assert is_deletion_correcting(S("0110"), t)
    assert not is_deletion_correcting(S("0101", "0011"), 1)
    with pytest.raises(DomainError):
        is_deletion_correcting(S("01"), 3)
    c = S("0000", "0110")
    assert min_distance(c) == 2
    assert is_deletion_correcting(c, 1) and not is_deletion_correcting(c, 2)


def test_di_ball_shape():
    assert is_di_correcting(S("0000", "1111"), 1, 2)
    assert is_insertion_correcting(S("000", "111"), 2)


def test_two_word_codes_exhaustive():
    for n in range(1, 8):
        ws = list(all_words(n, 2))
        for a, b in itertools.combinations(ws, 2):
            code = WordSet.of([a, b])
            d = fll_distance(a, b)
            for t in range(0, min(3, n) + 1):
                assert is_deletion_correcting(code, t) == (d >= t + 1)
            for s in range(0, min(3, n) + 1):
                for t1 in range(s + 1):
                    rep = equivalence_harness(code, t1, s - t1)
                    assert rep.agree, (a, b, t1, s - t1, rep.statements)


def test_harness_random_codes():
    rng = random.Random(2024)
    for _ in range(200):
        n = rng.randint(3, 7)
        k = rng.randint(2, 4)
        code = WordSet.of(Word.from_rank(r, n, 2) for r in rng.sample(range(2**n), k))
        s = rng.randint(0, 3)
        t1 = rng.randint(0, s)
        rep = equivalence_harness(code, t1, s - t1)
        assert rep.agree, rep.statements
        if s % 2:
            assert "correct_and_detect" in rep.statements


def test_harness_rejects_large_radius():
    with pytest.raises(DomainError):
        equivalence_harness(S("01", "10"), 2, 1)


def test_ternary_length_two_exceeds_claimed_maximum():
    # every word with two distinct symbols shares a symbol with every other one
    six = S("01", "10", "02", "20", "12", "21", q=3)
    assert diameter(six) == 1 and is_maximal_anticode(six, 1)
    assert search_maximal_anticodes(2, 3).max_size == 6 > 2 * (3 - 1) + 1
