"""FO2[<, suc, min, max] formulas over finite words.

Variables are ``x`` and ``y``; positions are numbered from 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ._lexer import Cursor, FormulaSyntaxError
from .metrics import DepthMetrics

VARS = ("x", "y")


def other(v: str) -> str:
    return "y" if v == "x" else "x"


class FO2SyntaxError(FormulaSyntaxError):
    pass


@dataclass(frozen=True)
class Const:
    value: bool


@dataclass(frozen=True)
class Label:
    var: str
    letter: str


@dataclass(frozen=True)
class Eq:
    left: str
    right: str


@dataclass(frozen=True)
class Less:
    left: str
    right: str


@dataclass(frozen=True)
class Suc:
    """``suc(left, right)``: right = left + 1."""
    left: str
    right: str


@dataclass(frozen=True)
class Min:
    var: str


@dataclass(frozen=True)
class Max:
    var: str


@dataclass(frozen=True)
class Not:
    body: object


@dataclass(frozen=True)
class And:
    parts: tuple


@dataclass(frozen=True)
class Or:
    parts: tuple


@dataclass(frozen=True)
class Exists:
    var: str
    body: object


@dataclass(frozen=True)
class Forall:
    var: str
    body: object


TOP, BOTTOM = Const(True), Const(False)
ATOMS = (Const, Label, Eq, Less, Suc, Min, Max)
QUANTIFIERS = (Exists, Forall)


def conj(*parts):
    return parts[0] if len(parts) == 1 else And(tuple(parts))


def disj(*parts):
    return parts[0] if len(parts) == 1 else Or(tuple(parts))


def children(phi) -> tuple:
    if isinstance(phi, (And, Or)):
        return phi.parts
    if isinstance(phi, (Not, Exists, Forall)):
        return (phi.body,)
    return ()


def free_vars(phi) -> frozenset[str]:
    if isinstance(phi, Label):
        return frozenset((phi.var,))
    if isinstance(phi, (Min, Max)):
        return frozenset((phi.var,))
    if isinstance(phi, (Eq, Less, Suc)):
        return frozenset((phi.left, phi.right))
    if isinstance(phi, QUANTIFIERS):
        return free_vars(phi.body) - {phi.var}
    return frozenset().union(*(free_vars(c) for c in children(phi)))


def letters(phi) -> frozenset[str]:
    if isinstance(phi, Label):
        return frozenset(phi.letter)
    return frozenset().union(*(letters(c) for c in children(phi)))


def uses_min_max(phi) -> bool:
    return isinstance(phi, (Min, Max)) or any(uses_min_max(c) for c in children(phi))


# parsing

_RESERVED = {"suc", "min", "max", "true", "false"}


class _Parser:
    def __init__(self, text: str):
        self.c = Cursor(text, FO2SyntaxError)

    def formula(self):
        return self.disjunction()

    def disjunction(self):
        parts = [self.conjunction()]
        while self.c.peek() == "|":
            self.c.take("|")
            parts.append(self.conjunction())
        return disj(*parts)

    def conjunction(self):
        parts = [self.unary()]
        while self.c.peek() == "&":
            self.c.take("&")
            parts.append(self.unary())
        return conj(*parts)

    def var(self) -> str:
        c = self.c
        c.skip()
        start = c.pos
        name = ""
        while c.pos < len(c.text) and (c.text[c.pos].isalnum() or c.text[c.pos] == "_"):
            name += c.text[c.pos]
            c.pos += 1
        if not name:
            raise FO2SyntaxError("expected a variable", start)
        if name not in VARS:
            raise FO2SyntaxError(f"only the variables x and y are allowed, found {name!r}", start)
        return name

    def unary(self):
        c = self.c
        nxt = c.peek()
        if nxt == "!":
            c.take("!")
            return Not(self.unary())
        if nxt == "(":
            c.take("(")
            phi = self.formula()
            c.take(")")
            return phi
        if nxt in ("E", "A") and c.peek(2)[1:] not in ("(", ""):
            start = c.pos
            c.pos += 1
            name = ""
            while c.pos < len(c.text) and (c.text[c.pos].isalnum() or c.text[c.pos] == "_"):
                name += c.text[c.pos]
                c.pos += 1
            if name not in VARS:
                raise FO2SyntaxError(
                    f"only the variables x and y are allowed, found {name!r}", start + 1)
            body = self.formula()
            return (Exists if nxt == "E" else Forall)(name, body)
        return self.atom()

    def atom(self):
        c = self.c
        c.skip()
        start = c.pos
        for word, value in (("true", True), ("false", False)):
            if c.at_word(word):
                c.pos += len(word)
                return Const(value)
        for word in ("suc", "min", "max"):
            if c.at_word(word) or c.text.startswith(word + "(", c.pos):
                c.pos += len(word)
                c.take("(")
                a = self.var()
                if word == "suc":
                    c.take(",")
                    b = self.var()
                    c.take(")")
                    return Suc(a, b)
                c.take(")")
                return (Min if word == "min" else Max)(a)
        if c.done():
            raise FO2SyntaxError("unexpected end of input", start)
        ch = c.text[c.pos]
        if ch in VARS and not c.text[c.pos + 1:c.pos + 2].lstrip().startswith("("):
            a = self.var()
            if c.peek() == "<":
                c.take("<")
                return Less(a, self.var())
            if c.peek() == "=":
                c.take("=")
                return Eq(a, self.var())
            raise FO2SyntaxError("expected '<' or '='", c.pos)
        if ch in "()&|!<=," or ch.isspace():
            raise FO2SyntaxError(f"unexpected {ch!r}", start)
        c.pos += 1
        if c.peek() != "(":
            raise FO2SyntaxError(f"unknown atom starting with {ch!r}", start)
        c.take("(")
        v = self.var()
        c.take(")")
        return Label(v, ch)


def parse_fo2(text: str):
    p = _Parser(text)
    if p.c.done():
        raise FO2SyntaxError("empty formula", 0)
    phi = p.formula()
    if not p.c.done():
        raise FO2SyntaxError(f"unexpected {p.c.text[p.c.pos]!r}", p.c.pos)
    return phi


# printing

def _prec(phi) -> int:
    if isinstance(phi, Or):
        return 1
    if isinstance(phi, And):
        return 2
    if isinstance(phi, QUANTIFIERS):
        return 0
    return 3


def show(phi) -> str:
    if isinstance(phi, Const):
        return "true" if phi.value else "false"
    if isinstance(phi, Label):
        return f"{phi.letter}({phi.var})"
    if isinstance(phi, Eq):
        return f"{phi.left}={phi.right}"
    if isinstance(phi, Less):
        return f"{phi.left}<{phi.right}"
    if isinstance(phi, Suc):
        return f"suc({phi.left},{phi.right})"
    if isinstance(phi, Min):
        return f"min({phi.var})"
    if isinstance(phi, Max):
        return f"max({phi.var})"
    if isinstance(phi, Not):
        inner = show(phi.body)
        return "!" + (inner if _prec(phi.body) == 3 else f"({inner})")
    if isinstance(phi, QUANTIFIERS):
        q = "E" if isinstance(phi, Exists) else "A"
        return f"{q}{phi.var} {show(phi.body)}"
    level = _prec(phi)
    sep = " & " if isinstance(phi, And) else " | "
    return sep.join(show(p) if _prec(p) > level else f"({show(p)})" for p in phi.parts)


# semantics

def eval_fo2(phi, u: str, sigma: Mapping[str, int] | None = None) -> bool:
    sigma = dict(sigma or {})
    missing = free_vars(phi) - set(sigma)
    if missing:
        raise ValueError(f"unbound free variable(s): {', '.join(sorted(missing))}")
    for v, i in sigma.items():
        if not 1 <= i <= len(u):
            raise ValueError(f"position {i} for {v} is outside 1..{len(u)}")
    return _eval(phi, u, sigma)


def _eval(phi, u: str, s: dict) -> bool:
    if isinstance(phi, Const):
        return phi.value
    if isinstance(phi, Label):
        return u[s[phi.var] - 1] == phi.letter
    if isinstance(phi, Eq):
        return s[phi.left] == s[phi.right]
    if isinstance(phi, Less):
        return s[phi.left] < s[phi.right]
    if isinstance(phi, Suc):
        return s[phi.right] == s[phi.left] + 1
    if isinstance(phi, Min):
        return s[phi.var] == 1
    if isinstance(phi, Max):
        return s[phi.var] == len(u)
    if isinstance(phi, Not):
        return not _eval(phi.body, u, s)
    if isinstance(phi, And):
        return all(_eval(p, u, s) for p in phi.parts)
    if isinstance(phi, Or):
        return any(_eval(p, u, s) for p in phi.parts)
    saved = s.get(phi.var)
    try:
        for i in range(1, len(u) + 1):
            s[phi.var] = i
            r = _eval(phi.body, u, s)
            if isinstance(phi, Exists) and r:
                return True
            if isinstance(phi, Forall) and not r:
                return False
        return isinstance(phi, Forall)
    finally:
        if saved is None:
            s.pop(phi.var, None)
        else:
            s[phi.var] = saved


# metrics

def fo2_metrics(phi) -> DepthMetrics:
    """Alternation depth of the negation normal form, and quantifier depth.

    Quantifiers of one type separated only by Boolean connectives belong
    to the same block.
    """
    return DepthMetrics(_blocks(phi, False, None), _qdepth(phi))


def _blocks(phi, negated: bool, current) -> int:
    if isinstance(phi, Not):
        return _blocks(phi.body, not negated, current)
    if isinstance(phi, QUANTIFIERS):
        kind = isinstance(phi, Exists) != negated      # True for an existential in NNF
        return (kind != current) + _blocks(phi.body, negated, kind)
    return max((_blocks(c, negated, current) for c in children(phi)), default=0)


def _qdepth(phi) -> int:
    below = max((_qdepth(c) for c in children(phi)), default=0)
    return below + isinstance(phi, QUANTIFIERS)


def nnf(phi, negated: bool = False):
    """Negation normal form: negations only in front of atoms."""
    if isinstance(phi, Not):
        return nnf(phi.body, not negated)
    if isinstance(phi, Const):
        return Const(phi.value != negated)
    if isinstance(phi, ATOMS):
        return Not(phi) if negated else phi
    if isinstance(phi, (And, Or)):
        flip = (isinstance(phi, And) == negated)
        parts = tuple(nnf(p, negated) for p in phi.parts)
        return Or(parts) if flip else And(parts)
    dual = isinstance(phi, Exists) == negated
    return (Forall if dual else Exists)(phi.var, nnf(phi.body, negated))
