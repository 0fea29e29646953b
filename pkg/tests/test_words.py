import re

import pytest
from hypothesis import given, strategies as st

from fo2alt.words import (Alphabet, MonomialPattern, bounded_prefix, bounded_suffix,
                          factor_alphabet, monomial_member, monomial_profile)
from oracles import naive_monomial_profile

ab_words = st.text(alphabet="ab", max_size=7)


def test_alphabet_validation():
    assert Alphabet("ab") == ("a", "b")
    assert Alphabet.of("abba") == ("a", "b")
    for bad in ("", "aa", ["ab"], " "):
        with pytest.raises(ValueError):
            Alphabet(bad)


def test_alphabet_check_reports_position():
    with pytest.raises(ValueError, match="position 3"):
        Alphabet("ab").check("abc")


def test_shortlex_words():
    assert list(Alphabet("ab").words(2)) == ["", "a", "b", "aa", "ab", "ba", "bb"]
    assert list(Alphabet("ab").words(2, 2)) == ["aa", "ab", "ba", "bb"]


def test_factor_alphabet_examples():
    assert factor_alphabet("abab", 2) == {"ab", "ba"}
    assert factor_alphabet("ab", 3) == frozenset()
    with pytest.raises(ValueError):
        factor_alphabet("ab", 0)


def test_prefix_suffix_clip():
    assert bounded_prefix("abc", 2) == "ab"
    assert bounded_prefix("abc", 7) == "abc"
    assert bounded_suffix("abc", 2) == "bc"
    assert bounded_suffix("abc", 0) == ""


@given(ab_words, st.integers(0, 8))
def test_prefix_suffix_lengths(u, k):
    assert len(bounded_prefix(u, k)) == min(k, len(u)) == len(bounded_suffix(u, k))
    assert u.startswith(bounded_prefix(u, k)) and u.endswith(bounded_suffix(u, k))


def test_pattern_rendering_and_validation():
    p = MonomialPattern(("ab", "b"), "*", leading_gap=True, trailing_gap=True)
    assert str(p) == "A*abA*bA*" and p.weight == 3
    with pytest.raises(ValueError):
        MonomialPattern(())
    with pytest.raises(ValueError):
        MonomialPattern(("a",), gap="?")


@given(ab_words,
       st.lists(st.text(alphabet="ab", min_size=1, max_size=2), min_size=1, max_size=3),
       st.sampled_from("+*"), st.booleans(), st.booleans())
def test_monomial_member_matches_regex(u, anchors, gap, lead, trail):
    p = MonomialPattern(tuple(anchors), gap, lead, trail)
    g = ".+" if gap == "+" else ".*"
    pattern = (g if lead else "") + g.join(anchors) + (g if trail else "")
    assert monomial_member(u, p) == bool(re.fullmatch(pattern, u))


def test_monomial_profile_examples():
    assert monomial_profile("ab", 1) == frozenset()
    assert monomial_profile("a", 1) == {("a",)}
    assert monomial_profile("aab", 2) == {("a", "b")}
    assert ("ab",) in monomial_profile("ab", 2)
    assert ("ab",) not in monomial_profile("ba", 2)


@given(st.text(alphabet="ab", max_size=6), st.integers(1, 3))
def test_monomial_profile_against_enumeration(u, n):
    assert monomial_profile(u, n) == naive_monomial_profile(u, n)


@given(st.text(alphabet="ab", min_size=1, max_size=6), st.integers(1, 3))
def test_profile_members_are_members(u, n):
    for anchors in monomial_profile(u, n):
        assert monomial_member(u, MonomialPattern(anchors))
