from itertools import product

import pytest
from hypothesis import given, strategies as st

from compcodes import (Composition, InvalidInputError, PartialWord, binomial, composition_of,
                       merge_patterns, pattern_count, prefix_extension_count, sandwich_count,
                       suffix_extension_count, word_count)
from compcodes.oracles import enumerate_words
from families import binary_words, compositions


def pascal(rows):
    tri = [[1]]
    for _ in range(rows):
        prev = tri[-1]
        tri.append([1] + [a + b for a, b in zip(prev, prev[1:])] + [1])
    return tri


PASCAL = pascal(200)


def C(*counts):
    return Composition(counts)


def test_binomial_examples():
    assert binomial(4, 3) == 4
    assert binomial(10, 4) == PASCAL[10][4] == 210
    assert all(binomial(n, 0) == 1 for n in range(20))


def test_binomial_out_of_range_is_zero():
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0
    assert binomial(-1, 0) == 0


def test_binomial_matches_pascal_triangle():
    for n, row in enumerate(PASCAL[:40]):
        for k, value in enumerate(row):
            assert binomial(n, k) == value


@given(st.integers(2, 400), st.data())
def test_pascal_identity(n, data):
    k = data.draw(st.integers(1, n - 1))
    assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_binomial_is_exact_beyond_machine_words():
    assert binomial(200, 100) == PASCAL[200][100]
    assert binomial(200, 100) > 2 ** 64
    assert word_count(C(100, 100)) == PASCAL[200][100]


def test_word_count_examples():
    assert word_count(C(2, 0)) == 1
    assert word_count(C(1, 1)) == 2
    assert word_count(C(3, 1)) == 4
    assert word_count(C(0, 5)) == 1
    assert word_count(C(1, 1, 1)) == len({w for w in product(range(3), repeat=3)
                                          if sorted(w) == [0, 1, 2]}) == 6


def test_word_count_matches_enumeration_small_alphabets():
    for d, max_len in [(2, 10), (3, 6), (4, 5)]:
        for comp in compositions(d, max_len):
            assert word_count(comp) == len(enumerate_words(comp)), comp


def test_extension_counts_examples():
    assert prefix_extension_count(C(2, 0), C(3, 1)) == 2
    assert prefix_extension_count(C(1, 1), C(3, 1)) == 1
    assert prefix_extension_count(C(3, 1), C(3, 1)) == 1
    assert prefix_extension_count(C(0, 2), C(3, 1)) == 0
    assert suffix_extension_count(C(1, 1), C(3, 1)) == 1
    assert suffix_extension_count(C(3, 1), C(3, 1)) == 1
    assert suffix_extension_count(C(3, 2), C(3, 1)) == 0


def test_suffix_example_by_enumeration():
    words = enumerate_words(C(3, 1))
    for tail in [(0, 1), (1, 0)]:
        assert sum(w[-2:] == tail for w in words) == suffix_extension_count(C(1, 1), C(3, 1))


def test_sandwich_examples():
    words = enumerate_words(C(2, 2))
    brute = sum(w[0] == 0 and w[-1] == 1 for w in words)
    assert sandwich_count(C(1, 0), C(0, 1), C(2, 2)) == brute == 2
    assert sandwich_count(C(1, 1), C(2, 0), C(3, 1)) == 1
    assert sandwich_count(C(2, 1), C(0, 1), C(1, 3)) == 0


def test_sandwich_refuses_overlap():
    with pytest.raises(InvalidInputError):
        sandwich_count(C(2, 0), C(1, 1), C(2, 1))


def test_extension_counts_match_enumeration():
    affixes = binary_words(5)
    for target in compositions(2, 10):
        words = enumerate_words(target)
        for a in affixes:
            ca = composition_of(a, 2)
            n = len(a)
            if n > target.total_length:
                continue
            assert prefix_extension_count(ca, target) == sum(w[:n] == a for w in words)
            assert suffix_extension_count(ca, target) == sum(w[-n:] == a for w in words)


def test_pattern_examples():
    assert pattern_count(PartialWord.free(4), C(3, 1)) == 4
    assert pattern_count(PartialWord.with_prefix((0,), 4), C(3, 1)) == 3
    conflict = merge_patterns(PartialWord.with_prefix((0, 1), 4), PartialWord.with_prefix((1,), 4))
    assert conflict is None
    assert pattern_count(conflict, C(3, 1)) == 0
    with pytest.raises(InvalidInputError):
        pattern_count(PartialWord.free(3), C(3, 1))


def test_merge_patterns_examples():
    p = PartialWord.with_prefix((0, 1), 4)
    assert merge_patterns(p, PartialWord.with_suffix((1, 0), 4)) == PartialWord((0, 1, 1, 0))
    assert merge_patterns(p, PartialWord.with_prefix((0,), 4)) == p
    with pytest.raises(InvalidInputError):
        merge_patterns(p, PartialWord.free(3))


def test_partial_word_accessors():
    p = PartialWord.with_suffix((1, 1), 5)
    assert p.length == 5
    assert p.fixed == {3: 1, 4: 1}
    with pytest.raises(InvalidInputError):
        PartialWord.with_prefix((0, 0, 0), 2)


cells = st.lists(st.sampled_from([None, 0, 1]), min_size=1, max_size=9)


@given(cells, st.data())
def test_pattern_count_matches_enumeration(cs, data):
    length = len(cs)
    ones = data.draw(st.integers(0, length))
    comp = C(length - ones, ones)
    pat = PartialWord(tuple(cs))
    brute = sum(all(c is None or c == s for c, s in zip(cs, w)) for w in enumerate_words(comp))
    assert pattern_count(pat, comp) == brute


@given(cells, st.data())
def test_pattern_count_monotone_in_fixing(cs, data):
    length = len(cs)
    ones = data.draw(st.integers(0, length))
    comp = C(length - ones, ones)
    pos = data.draw(st.integers(0, length - 1))
    sym = data.draw(st.sampled_from([0, 1]))
    tighter = merge_patterns(PartialWord(tuple(cs)), PartialWord(
        tuple(sym if i == pos else None for i in range(length))))
    assert pattern_count(tighter, comp) <= pattern_count(PartialWord(tuple(cs)), comp)
    assert pattern_count(PartialWord.free(length), comp) == word_count(comp)


def test_sandwich_agrees_with_merged_pattern():
    affixes = binary_words(4)
    for target in compositions(2, 8, min_length=2):
        length = target.total_length
        for a in affixes:
            for b in affixes:
                if len(a) + len(b) > length:
                    continue
                merged = merge_patterns(PartialWord.with_prefix(a, length),
                                        PartialWord.with_suffix(b, length))
                assert sandwich_count(composition_of(a, 2), composition_of(b, 2), target) \
                    == pattern_count(merged, target)


@given(st.lists(st.integers(0, 5), min_size=2, max_size=5), st.data())
def test_prefix_and_suffix_counts_are_symmetric(counts, data):
    target = Composition(tuple(counts))
    part = Composition(tuple(data.draw(st.integers(0, c + 1)) for c in counts))
    assert prefix_extension_count(part, target) == suffix_extension_count(part, target)
