import pytest

from fo2alt.logic import TranslationError, eval_fo2, eval_tl, fo2_metrics, parse_fo2, tl_metrics, translate
from fo2alt.logic.tl import show
from formulas import sentence_suite
from oracles import words

WORDS = list(words("ab", 5, 1))


def test_factor_ab():
    psi = translate(parse_fo2("Ex Ey (suc(x,y) & a(x) & b(y))"))
    assert show(psi) == "F(a & X b)"
    assert {u for u in WORDS if eval_tl(psi, u)} == {u for u in WORDS if "ab" in u}


def test_single_letter():
    psi = translate(parse_fo2("Ex a(x)"), "ab")
    assert {u for u in WORDS if eval_tl(psi, u)} == {u for u in WORDS if "a" in u}


def test_true_sentence():
    assert show(translate(parse_fo2("true"))) == "true"


def test_alternation_example():
    phi = parse_fo2("Ax Ey (x<y | b(x))")
    psi = translate(phi, "ab")
    assert all(eval_tl(psi, u) == eval_fo2(phi, u) for u in WORDS)
    assert tl_metrics(psi).m <= fo2_metrics(phi).m


def test_shadowed_quantifier():
    # the inner Ex rebinds x while y is still referenced
    phi = parse_fo2("Ex (a(x) & Ey (x<y & Ex (suc(y,x) & b(x))))")
    psi = translate(phi, "ab")
    assert all(eval_tl(psi, u) == eval_fo2(phi, u) for u in WORDS)


@pytest.mark.parametrize("text,msg", [("a(x)", "sentences"), ("Ex min(x)", "min and max"),
                                      ("Ex c(x)", "alphabet")])
def test_rejections(text, msg):
    with pytest.raises(TranslationError, match=msg):
        translate(parse_fo2(text), "ab")


@pytest.mark.parametrize("phi", sentence_suite(40, seed=11, depth=3))
def test_depth_three_sentences(phi):
    psi = translate(phi, "ab")
    src, dst = fo2_metrics(phi), tl_metrics(psi)
    assert all(eval_tl(psi, u) == eval_fo2(phi, u) for u in WORDS)
    assert dst.m <= src.m and dst.n <= 3 * src.n
