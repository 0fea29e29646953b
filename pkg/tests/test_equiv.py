import itertools

import pytest
from hypothesis import given, strategies as st

from fo2alt.logic import approx_equiv
from fo2alt.words import bounded_prefix, bounded_suffix, factor_alphabet, monomial_profile
from oracles import words

w6 = st.text(alphabet="ab", max_size=6)
nonempty = st.text(alphabet="ab", min_size=1, max_size=6)
params = st.tuples(st.integers(1, 3), st.integers(0, 3))


def test_examples():
    assert not approx_equiv("ab", "ba", 1, 2)
    assert approx_equiv("ab", "ba", 1, 1) == (monomial_profile("ab", 1) == monomial_profile("ba", 1))
    assert approx_equiv("abab", "abab", 3, 3)


@given(w6, w6, st.integers(1, 3))
def test_n_zero_is_total(u, v, m):
    assert approx_equiv(u, v, m, 0)


@given(w6, params)
def test_reflexive(u, mn):
    assert approx_equiv(u, u, *mn)


@given(w6, w6, params)
def test_symmetric(u, v, mn):
    assert approx_equiv(u, v, *mn) == approx_equiv(v, u, *mn)


@given(w6, w6, st.integers(2, 3), st.integers(1, 3))
def test_higher_levels_fix_local_data(u, v, m, n):
    if approx_equiv(u, v, m, n):
        for k in range(1, n + 1):
            assert factor_alphabet(u, k) == factor_alphabet(v, k)
            assert bounded_prefix(u, k) == bounded_prefix(v, k)
            assert bounded_suffix(u, k) == bounded_suffix(v, k)


def test_decreasing_n_is_monotone():
    pairs = list(itertools.product(words("ab", 6), repeat=2))
    for u, v in pairs:
        for m in (1, 2, 3):
            for n in (1, 2, 3):
                if approx_equiv(u, v, m, n):
                    assert approx_equiv(u, v, m, n - 1)


def test_decreasing_m_from_three_is_monotone():
    pairs = list(itertools.product(words("ab", 6), repeat=2))
    for u, v in pairs:
        for n in (1, 2, 3):
            if approx_equiv(u, v, 3, n):
                assert approx_equiv(u, v, 2, n)


def test_level_two_refines_level_one_one_step_shallower():
    pairs = list(itertools.product(words("ab", 6, 1), repeat=2))
    for u, v in pairs:
        for n in (1, 2, 3):
            if approx_equiv(u, v, 2, n):
                assert approx_equiv(u, v, 1, n - 1)


def test_level_two_misses_length_of_short_words():
    # level 2 only sees factors, prefixes and suffixes of length <= n,
    # while the anchored monomial a (weight 1) contains no word but a
    assert approx_equiv("a", "aa", 2, 1)
    assert not approx_equiv("a", "aa", 1, 1)


@given(nonempty, nonempty, st.sampled_from("ab"), params)
def test_congruence_on_nonempty_words(u, v, c, mn):
    if approx_equiv(u, v, *mn):
        assert approx_equiv(c + u, c + v, *mn)
        assert approx_equiv(u + c, v + c, *mn)


def test_empty_word_is_not_congruent():
    # the empty word has no monomials, nor does any long enough word of
    # one letter; appending a letter separates them
    assert approx_equiv("", "bbbbb", 1, 1)
    assert not approx_equiv("b", "bbbbbb", 1, 1)


def test_length_limit():
    with pytest.raises(ValueError):
        approx_equiv("a" * 65, "a", 2, 1)
