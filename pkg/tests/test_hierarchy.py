import json
import warnings

import pytest

from fo2alt.automata import compile_regex, syntactic_presentation
from fo2alt.hierarchy import (ABOVE_BOUND, INCONCLUSIVE, NOT_DEFINABLE, ClassificationReport,
                              LevelVerdict, check_level, classify, classify_regex)
from fo2alt.omega import IdentityVerdict, evaluate, level_identity
from fo2alt.semigroup import Semigroup, is_lda
from oracles import BudgetExceeded, naive_identity, naive_j_union, naive_lda

Z3 = Semigroup([[0, 1, 2], [1, 2, 0], [2, 0, 1]])

CORPUS = ["(ab)+", "(a|b)*ab(a|b)*", "a(a|b)*b", "a+", "(a|b)*a", "b*ab*", "(a|b)*aa(a|b)*",
          "((a|b)(a|b))+", "a*b(a|b)*", "(aa)+", "(a|b)*ab(a|b)*ba(a|b)*"]


def naive_minimal_level(pattern, max_m=2, budget=20_000_000):
    """Least level by brute force, or None when the oracle cannot decide."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        p = syntactic_presentation(compile_regex(pattern, "ab"))
    table = p.semigroup.table
    if not naive_lda(table):
        return NOT_DEFINABLE
    for m in range(1, max_m + 1):
        try:
            ok = naive_identity(table, *level_identity(m), budget=budget)
        except BudgetExceeded:
            return None
        if ok and (m > 1 or naive_j_union(table, p.image)):
            return m
    return None


def test_trivial_semigroup_any_level():
    for m in (1, 2, 3):
        assert check_level(Semigroup([[0]]), {0}, m).status == "holds"


def test_z3_level_one_fails_on_identity():
    v = check_level(Z3, {0, 1, 2}, 1)
    assert v.identity.status == "fails" and v.j_union is True and v.status == "fails"


def test_ab_plus():
    rep = classify_regex("(ab)+")
    assert rep.lda
    assert rep.levels[0].j_union is False and rep.levels[0].identity.holds
    assert [v.status for v in rep.levels] == ["fails", "holds", "inconclusive"]
    assert rep.minimal_level == 2


def test_level_one_example():
    assert classify_regex("(a|b)*ab(a|b)*").minimal_level == 1


def test_not_definable():
    with pytest.warns(UserWarning):
        rep = classify_regex("(ac*bc*)*", "abc")
    assert rep.minimal_level == NOT_DEFINABLE and rep.levels == []


@pytest.mark.parametrize("pattern", CORPUS)
def test_corpus_against_naive_oracle(pattern):
    rep = classify_regex(pattern, "ab", max_m=2)
    table = rep.semigroup.table
    assert rep.lda == naive_lda(table)
    for v in rep.levels:
        try:
            ok = naive_identity(table, *level_identity(v.level), budget=100_000)
        except BudgetExceeded:
            continue
        assert v.identity.holds == ok
        if v.level == 1:
            assert v.j_union == naive_j_union(table, rep.image)
    expected = naive_minimal_level(pattern, budget=100_000)
    if expected is not None:
        assert rep.minimal_level == expected
    # gate consistency
    if any(v.status == "holds" for v in rep.levels):
        assert rep.lda
    # counterexamples replay
    for v in rep.levels:
        if v.identity.counterexample:
            U, V = level_identity(v.level)
            h = v.identity.counterexample
            assert evaluate(U, h, rep.semigroup) != evaluate(V, h, rep.semigroup)


def _report(statuses):
    levels = [LevelVerdict(m, IdentityVerdict(s)) for m, s in enumerate(statuses, 2)]
    return ClassificationReport("x", ("a",), Semigroup([[0]]), frozenset(), True, levels, len(levels) + 1)


def test_minimal_level_markers():
    assert _report(["fails", "fails"]).minimal_level == ABOVE_BOUND
    rep = _report(["inconclusive", "holds"])
    assert rep.minimal_level == INCONCLUSIVE and rep.upper_bound == 3 and not rep.conclusive
    assert _report(["fails", "holds", "inconclusive"]).minimal_level == 3


def test_report_json_is_stable():
    a = classify_regex("(ab)+", max_m=2).to_json()
    b = classify_regex("(ab)+", max_m=2).to_json()
    assert a == b
    data = json.loads(a)
    assert list(data) == ["language", "semigroup_order", "elements", "image", "lda", "max_m",
                          "levels", "minimal_level", "upper_bound"]
    assert data["levels"][0]["j_union"] is False


def test_text_report_has_same_verdicts():
    rep = classify_regex("(ab)+", max_m=2)
    text = rep.to_text()
    assert "level 1: fails" in text and "level 2: holds" in text and "minimal level: 2" in text


def test_bad_arguments():
    with pytest.raises(ValueError):
        classify(compile_regex("a+"), max_m=0)
    with pytest.raises(ValueError):
        check_level(Z3, set(), 0)
