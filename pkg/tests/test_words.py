import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from blocktoeplitz.words import (Word, canonical, catalan_words, enumerate_pair_matched, generating_vertices,
                                 is_catalan, l0, n_pair_matched, sign_vectors)


@pytest.mark.parametrize("t", range(1, 7))
def test_pair_matched_counts(t):
    words = enumerate_pair_matched(t)
    assert len(words) == math.factorial(2 * t) // (2**t * math.factorial(t)) == n_pair_matched(t)
    assert len(set(words)) == len(words)
    assert [str(w) for w in words] == sorted(str(w) for w in words)


def test_small_enumerations():
    assert [str(w) for w in enumerate_pair_matched(1)] == ["aa"]
    assert [str(w) for w in enumerate_pair_matched(2)] == ["aabb", "abab", "abba"]


@pytest.mark.parametrize("t,c", [(1, 1), (2, 2), (3, 5), (4, 14), (5, 42)])
def test_catalan_counts(t, c):
    assert sum(map(is_catalan, enumerate_pair_matched(t))) == c == len(catalan_words(t))


@pytest.mark.parametrize("w,expected", [("aabb", True), ("abab", False), ("abccba", True), ("abba", True),
                                        ("abcabc", False)])
def test_is_catalan_examples(w, expected):
    assert is_catalan(Word(w)) is expected


def test_generating_vertices_examples():
    assert generating_vertices(Word("abab")) == ([1, 2], {1: 3, 2: 4})
    assert generating_vertices(Word("aabb")) == ([1, 3], {1: 2, 3: 4})


@pytest.mark.parametrize("bad", ["", "a", "ab", "ba", "aab", "abca", "aaa a"])
def test_invalid_words(bad):
    with pytest.raises(ValueError):
        Word(bad)


def test_canonical():
    assert str(canonical("xyxy")) == "abab"
    assert str(canonical("bbaa")) == "aabb"


@given(st.integers(1, 5).flatmap(lambda t: st.sampled_from(enumerate_pair_matched(t))))
def test_word_arrays_consistent(w):
    is_first, letter, mate = w.arrays()
    S, mates = generating_vertices(w)
    assert list(S) == [i for i in range(1, len(w) + 1) if is_first[i]]
    for i in range(1, len(w) + 1):
        assert mate[mate[i]] == i and letter[i] == letter[mate[i]]
        assert is_first[i] != is_first[mate[i]]
    assert all(mates[i] == mate[i] for i in S)


@given(st.integers(1, 5).flatmap(lambda t: st.sampled_from(enumerate_pair_matched(t))))
def test_catalan_iff_reduces_by_removal(w):
    # a word is Catalan iff some adjacent double letter exists and removing it leaves a Catalan word
    s = str(w)
    if len(s) == 2:
        assert is_catalan(w)
        return
    doubles = [i for i in range(len(s) - 1) if s[i] == s[i + 1]]
    if not doubles:
        assert not is_catalan(w)
    else:
        i = doubles[0]
        assert is_catalan(w) == is_catalan(canonical(s[:i] + s[i + 2:]))


def test_sign_vectors():
    assert list(sign_vectors(2)) == [(-1, -1), (-1, 1), (1, -1), (1, 1)]
    assert l0(3) == (-1, -1, -1)
