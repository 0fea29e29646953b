"""Translation of FO2[<, suc] sentences into TL[X, F, Y, P].

For a formula whose current variable sits at position ``i`` and whose other
variable sits at a position ``j`` with known label and known order type
``ord(i, j)``, the translation is a TL formula evaluated at ``i``.
Quantifying the other variable splits over the label at ``i`` (which the
newly bound variable sees as the other's label) and over the five order
types, each reached by a fixed modality prefix.
"""
from __future__ import annotations

from typing import Iterable

from . import fo2
from .fo2 import (And, Const, Eq, Exists, Forall, Label, Less, Not, Or, Suc,
                  free_vars, other)
from .tl import Letter, modal, t_and, t_not, t_or, TBOTTOM, TTOP

# order types of (new position, old position) with the modality prefix reaching them
ORDER_TYPES = ("<<", "-1", "0", "+1", ">>")
PREFIX = {"<<": "YYP", "-1": "Y", "0": "", "+1": "X", ">>": "XXF"}


class TranslationError(ValueError):
    pass


def translate(phi, alphabet: Iterable[str] | None = None):
    """Equivalent TL formula for an FO2[<, suc] sentence.

    ``alphabet`` defaults to the letters of ``phi``; the result is then
    only meant for words over those letters.
    """
    if free_vars(phi):
        raise TranslationError("only sentences can be translated; free: "
                               + ", ".join(sorted(free_vars(phi))))
    if fo2.uses_min_max(phi):
        raise TranslationError("min and max predicates are not supported")
    letters = tuple(dict.fromkeys(alphabet)) if alphabet is not None else tuple(sorted(fo2.letters(phi)))
    if not letters:
        letters = ("a",)        # no label atoms: the letter split is immaterial
    missing = fo2.letters(phi) - set(letters)
    if missing:
        raise TranslationError(f"letters {''.join(sorted(missing))!r} are not in the alphabet")
    return _Translator(letters).sentence(lift_shadowed(phi), False)


# Normalization: a quantifier rebinding the variable its enclosing quantifier
# bound, while mentioning the other (outer) variable, is pulled out by case
# distinction on its truth value. Occurrences are lifted one polarity at a
# time, so that the lifted subformula keeps its polarity and no quantifier
# block is added: f(g) = f(0) | (g & f(1)) when f is monotone in g, and
# f(g) = f(1) | (!g & f(0)) when antitone.

def _boolean_subterms(phi, negated=False):
    """Maximal non-Boolean subformulas reached through connectives only,
    each with its polarity."""
    if isinstance(phi, (And, Or)):
        for p in phi.parts:
            yield from _boolean_subterms(p, negated)
    elif isinstance(phi, Not):
        yield from _boolean_subterms(phi.body, not negated)
    else:
        yield phi, negated


def _replace(phi, target, negated, value, polarity=False):
    if phi == target and polarity == negated:
        return value
    if isinstance(phi, (And, Or)):
        return type(phi)(tuple(_replace(p, target, negated, value, polarity) for p in phi.parts))
    if isinstance(phi, Not):
        return Not(_replace(phi.body, target, negated, value, not polarity))
    return phi


def lift_shadowed(phi):
    if isinstance(phi, (And, Or)):
        return type(phi)(tuple(lift_shadowed(p) for p in phi.parts))
    if isinstance(phi, Not):
        return Not(lift_shadowed(phi.body))
    if not isinstance(phi, (Exists, Forall)):
        return phi
    z = phi.var
    body = lift_shadowed(phi.body)
    for gamma, negated in _boolean_subterms(body):
        if isinstance(gamma, (Exists, Forall)) and gamma.var == z and other(z) in free_vars(gamma):
            quant = type(phi)
            yes = quant(z, _replace(body, gamma, negated, fo2.TOP))
            no = quant(z, _replace(body, gamma, negated, fo2.BOTTOM))
            if negated:
                return lift_shadowed(Or((yes, And((Not(gamma), no)))))
            return lift_shadowed(Or((no, And((gamma, yes)))))
    return type(phi)(z, body)


class _Translator:
    def __init__(self, letters: tuple[str, ...]):
        self.letters = letters

    def letter(self, b: str, negated: bool):
        if not negated:
            return Letter(b)
        return t_or(*(Letter(c) for c in self.letters if c != b))

    def sentence(self, phi, neg: bool):
        """Top level: no position yet."""
        if isinstance(phi, Const):
            return TTOP if phi.value != neg else TBOTTOM
        if isinstance(phi, Not):
            return self.sentence(phi.body, not neg)
        if isinstance(phi, (And, Or)):
            parts = [self.sentence(p, neg) for p in phi.parts]
            return t_and(*parts) if isinstance(phi, And) != neg else t_or(*parts)
        if isinstance(phi, (Exists, Forall)):
            return self.quantify(phi, neg, lambda inner_neg: modal(
                "F", self.at(phi.body, phi.var, None, None, inner_neg)))
        raise TranslationError(f"free variable in atom {fo2.show(phi)}")

    def quantify(self, phi, neg: bool, build):
        """Existentials under an even number of negations need no negation;
        every switch of quantifier kind costs one."""
        existential = isinstance(phi, Exists) != neg
        if isinstance(phi, Exists):
            inner = build(False)
            return inner if existential else t_not(inner)
        inner = build(True)
        return inner if existential else t_not(inner)

    def at(self, phi, cur: str, order: str | None, label: str | None, neg: bool):
        """TL formula at the position of ``cur``, equivalent to ``phi`` (or its
        negation) when the other variable has letter ``label`` and
        ``ord(cur, other) = order``."""
        oth = other(cur)
        if isinstance(phi, Const):
            return TTOP if phi.value != neg else TBOTTOM
        if isinstance(phi, Not):
            return self.at(phi.body, cur, order, label, not neg)
        if isinstance(phi, (And, Or)):
            parts = [self.at(p, cur, order, label, neg) for p in phi.parts]
            return t_and(*parts) if isinstance(phi, And) != neg else t_or(*parts)
        if isinstance(phi, Label):
            if phi.var == cur:
                return self.letter(phi.letter, neg)
            self._need(order, phi)
            return _truth((phi.letter == label) != neg)
        if isinstance(phi, (Eq, Less, Suc)):
            return _truth(self._relation(phi, cur, order) != neg)
        if isinstance(phi, (Exists, Forall)):
            z = phi.var
            if z == cur:
                # a sentence nested at a position: PF reaches every position
                assert oth not in free_vars(phi), "shadowed quantifier left after normalization"
                return self.quantify(phi, neg, lambda inner_neg: modal(
                    "PF", self.at(phi.body, z, None, None, inner_neg)))
            return self.quantify(phi, neg, lambda inner_neg: self.step(phi.body, z, inner_neg))
        raise TranslationError(f"unsupported atom {fo2.show(phi)}")

    def step(self, body, z: str, neg: bool):
        """Existential move from the current position to the new position of ``z``."""
        branches = {}
        for b in self.letters:
            branches[b] = t_or(*(modal(PREFIX[t], self.at(body, z, t, b, neg))
                                 for t in ORDER_TYPES))
        groups: dict = {}
        for b, f in branches.items():
            groups.setdefault(f, []).append(b)
        if len(groups) == 1:
            return next(iter(groups))
        return t_or(*(t_and(t_or(*(Letter(b) for b in bs)), f) for f, bs in groups.items()))

    @staticmethod
    def _need(order, phi):
        if order is None:
            raise TranslationError(f"free variable in {fo2.show(phi)}")

    def _relation(self, phi, cur: str, order: str | None) -> bool:
        a, b = phi.left, phi.right
        if a == b:
            return isinstance(phi, Eq)
        self._need(order, phi)
        # orient as (cur, other): ord(cur, other) = order
        forward = a == cur
        if isinstance(phi, Eq):
            return order == "0"
        if isinstance(phi, Less):
            return order in (("<<", "-1") if forward else ("+1", ">>"))
        return order == ("-1" if forward else "+1")


def _truth(value: bool):
    return TTOP if value else TBOTTOM
