import json
import warnings

import pytest
from hypothesis import given, settings, strategies as st

from fo2alt.automata import (Dfa, RegexSyntaxError, accepts, compile_regex, normalize_dfa,
                             parse_regex, syntactic_presentation)
from fo2alt.semigroup import idempotents
from oracles import regex_member, residual_class_count, syntactic_class_count, words

REGEXES = ["(ab)+", "(a|b)*ab(a|b)*", "a(a|b)*b", "a+", "(a|b)*a(a|b)", "ab?a*", "((a|b)(a|b))+",
           "(ba|a)*b", "b*(ab*ab*)+"]


@pytest.mark.parametrize("pattern", REGEXES)
def test_compiled_dfa_agrees_with_re(pattern):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        d = compile_regex(pattern, "ab")
    for u in words("ab", 7):
        assert accepts(d, u) == regex_member(pattern, u), u


@pytest.mark.parametrize("pattern", REGEXES)
def test_dfa_is_minimal(pattern):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        d = compile_regex(pattern, "ab")
    # accepts() drops the empty word, so the initial state may be a
    # private copy; the residual oracle sees the same language
    assert d.states == residual_class_count(pattern, "ab", 6)


@pytest.mark.parametrize("pattern,order", [("(ab)+", 5), ("(a|b)*ab(a|b)*", 4), ("a(a|b)*b", 4)])
def test_syntactic_order_matches_context_oracle(pattern, order):
    S = syntactic_presentation(compile_regex(pattern)).semigroup
    assert S.order == order == syntactic_class_count(pattern, "ab", 4)


def test_ab_plus_presentation():
    p = syntactic_presentation(compile_regex("(ab)+"))
    S = p.semigroup
    assert S.names == ("a", "b", "aa", "ab", "ba")
    assert {S.names[x] for x in p.image} == {"ab"}
    assert {S.names[x] for x in idempotents(S)} == {"aa", "ab", "ba"}
    assert compile_regex("(ab)+").states == 4


def test_ac_bc_star_order():
    with pytest.warns(UserWarning, match="empty word"):
        d = compile_regex("(ac*bc*)*", "abc")
    assert syntactic_presentation(d).semigroup.order == 8
    assert not accepts(d, "")


def test_a_star_is_trivial():
    with pytest.warns(UserWarning):
        d = compile_regex("a*")
    assert syntactic_presentation(d).semigroup.order == 1


@given(st.text(alphabet="ab", min_size=1, max_size=8))
def test_morphism_respects_membership(u):
    p = syntactic_presentation(compile_regex("(ab)+"))
    assert (p.evaluate(u) in p.image) == regex_member("(ab)+", u)


@pytest.mark.parametrize("text,pos", [("(ab", 0), ("ab)", 2), ("*a", 0), ("", 0), ("a|c", 2)])
def test_regex_errors(text, pos):
    with pytest.raises(RegexSyntaxError) as err:
        parse_regex(text, "ab")
    assert err.value.position == pos


def test_dfa_json_round_trip():
    d = compile_regex("(ab)+")
    assert Dfa.from_json(d.to_json()) == d
    data = json.loads(d.to_json())
    assert set(data) == {"alphabet", "states", "initial", "accepting", "transitions"}


def test_normalize_is_idempotent_and_canonical():
    d = compile_regex("(a|b)*ab(a|b)*")
    assert normalize_dfa(d) == d
    # renumber the states and check normalisation undoes it
    perm = {q: (q + 1) % d.states for q in range(d.states)}
    shuffled = Dfa(d.alphabet, d.states, perm[d.initial], frozenset(perm[q] for q in d.accepting),
                   {a: tuple(perm[d.transitions[a][q]] for q in sorted(perm, key=perm.get))
                    for a in d.alphabet})
    assert normalize_dfa(shuffled) == d


def test_dfa_validation():
    with pytest.raises(ValueError):
        Dfa.from_dict({"alphabet": ["a"], "states": 1, "initial": 0, "accepting": [],
                       "transitions": {"a": [3]}})
    with pytest.raises(ValueError):
        accepts(compile_regex("a+"), "ab")
