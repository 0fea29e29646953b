"""Unary temporal logic TL[X, F, Y, P] over finite words.

F and P are reflexive. Without a position, future modalities start in
front of the word and past modalities behind it; a bare letter is false.
"""
from __future__ import annotations

from dataclasses import dataclass

from ._lexer import Cursor, FormulaSyntaxError
from .metrics import DepthMetrics

MODALITIES = "XFYP"


class TLSyntaxError(FormulaSyntaxError):
    pass


@dataclass(frozen=True)
class TConst:
    value: bool


@dataclass(frozen=True)
class Letter:
    letter: str


@dataclass(frozen=True)
class TNot:
    body: object


@dataclass(frozen=True)
class TAnd:
    parts: tuple


@dataclass(frozen=True)
class TOr:
    parts: tuple


@dataclass(frozen=True)
class Modal:
    op: str          # one of X, F, Y, P
    body: object


TTOP, TBOTTOM = TConst(True), TConst(False)


def children(phi) -> tuple:
    if isinstance(phi, (TAnd, TOr)):
        return phi.parts
    if isinstance(phi, (TNot, Modal)):
        return (phi.body,)
    return ()


# smart constructors with constant folding

def t_not(phi):
    if isinstance(phi, TConst):
        return TConst(not phi.value)
    if isinstance(phi, TNot):
        return phi.body
    return TNot(phi)


def t_and(*parts):
    out = []
    for p in parts:
        if isinstance(p, TAnd):
            items = p.parts
        else:
            items = (p,)
        for q in items:
            if q == TBOTTOM:
                return TBOTTOM
            if q != TTOP and q not in out:
                out.append(q)
    if not out:
        return TTOP
    return out[0] if len(out) == 1 else TAnd(tuple(out))


def t_or(*parts):
    out = []
    for p in parts:
        items = p.parts if isinstance(p, TOr) else (p,)
        for q in items:
            if q == TTOP:
                return TTOP
            if q != TBOTTOM and q not in out:
                out.append(q)
    if not out:
        return TBOTTOM
    return out[0] if len(out) == 1 else TOr(tuple(out))


def modal(ops: str, phi):
    """Apply the modalities in ``ops``, outermost first."""
    for op in reversed(ops):
        if phi == TBOTTOM:
            return TBOTTOM
        phi = Modal(op, phi)
    return phi


# parsing

class _Parser:
    def __init__(self, text: str):
        self.c = Cursor(text, TLSyntaxError)

    def formula(self):
        parts = [self.conjunction()]
        while self.c.peek() == "|":
            self.c.take("|")
            parts.append(self.conjunction())
        return parts[0] if len(parts) == 1 else TOr(tuple(parts))

    def conjunction(self):
        parts = [self.unary()]
        while self.c.peek() == "&":
            self.c.take("&")
            parts.append(self.unary())
        return parts[0] if len(parts) == 1 else TAnd(tuple(parts))

    def unary(self):
        c = self.c
        nxt = c.peek()
        start = c.pos
        if nxt == "":
            raise TLSyntaxError("unexpected end of input", start)
        if nxt == "!":
            c.take("!")
            return TNot(self.unary())
        if nxt in MODALITIES:
            c.pos += 1
            return Modal(nxt, self.unary())
        if nxt == "(":
            c.take("(")
            phi = self.formula()
            c.take(")")
            return phi
        for word, value in (("true", True), ("false", False)):
            if c.at_word(word):
                c.pos += len(word)
                return TConst(value)
        if nxt in "()&|!" or not nxt.isprintable():
            raise TLSyntaxError(f"unexpected {nxt!r}", start)
        c.pos += 1
        return Letter(nxt)


def parse_tl(text: str):
    p = _Parser(text)
    if p.c.done():
        raise TLSyntaxError("empty formula", 0)
    phi = p.formula()
    if not p.c.done():
        raise TLSyntaxError(f"unexpected {p.c.text[p.c.pos]!r}", p.c.pos)
    return phi


def letters(phi) -> frozenset[str]:
    if isinstance(phi, Letter):
        return frozenset(phi.letter)
    return frozenset().union(*(letters(c) for c in children(phi)))


def show(phi) -> str:
    if isinstance(phi, TConst):
        return "true" if phi.value else "false"
    if isinstance(phi, Letter):
        return phi.letter
    if isinstance(phi, (TNot, Modal)):
        head = "!" if isinstance(phi, TNot) else phi.op
        inner = show(phi.body)
        if isinstance(phi.body, (TAnd, TOr)):
            return f"{head}({inner})"
        sep = " " if isinstance(phi, Modal) and isinstance(phi.body, (Letter, TConst)) else ""
        return f"{head}{sep}{inner}"
    sep = " & " if isinstance(phi, TAnd) else " | "
    return sep.join(f"({show(p)})" if isinstance(p, (TAnd, TOr)) else show(p) for p in phi.parts)


# semantics

def eval_tl(phi, u: str, pos: int | None = None) -> bool:
    if pos is None:
        if not u:
            raise ValueError("formulas are evaluated on nonempty words")
        return _top(phi, u)
    if not 1 <= pos <= len(u):
        raise ValueError(f"position {pos} is outside 1..{len(u)}")
    return _at(phi, u, pos)


def _top(phi, u: str) -> bool:
    if isinstance(phi, TConst):
        return phi.value
    if isinstance(phi, Letter):
        return False
    if isinstance(phi, TNot):
        return not _top(phi.body, u)
    if isinstance(phi, TAnd):
        return all(_top(p, u) for p in phi.parts)
    if isinstance(phi, TOr):
        return any(_top(p, u) for p in phi.parts)
    n = len(u)
    if phi.op == "X":
        return _at(phi.body, u, 1)
    if phi.op == "Y":
        return _at(phi.body, u, n)
    # F from position 1 and P from position |u| both range over every position
    return any(_at(phi.body, u, j) for j in range(1, n + 1))


def _at(phi, u: str, i: int) -> bool:
    if isinstance(phi, TConst):
        return phi.value
    if isinstance(phi, Letter):
        return u[i - 1] == phi.letter
    if isinstance(phi, TNot):
        return not _at(phi.body, u, i)
    if isinstance(phi, TAnd):
        return all(_at(p, u, i) for p in phi.parts)
    if isinstance(phi, TOr):
        return any(_at(p, u, i) for p in phi.parts)
    op, n = phi.op, len(u)
    if op == "X":
        return i < n and _at(phi.body, u, i + 1)
    if op == "Y":
        return i > 1 and _at(phi.body, u, i - 1)
    if op == "F":
        return any(_at(phi.body, u, j) for j in range(i, n + 1))
    return any(_at(phi.body, u, j) for j in range(1, i + 1))


# metrics

def tl_metrics(phi) -> DepthMetrics:
    """Operator depth, and the negation class: one plus the deepest
    negation nesting inside any outermost modality subformula. Negations
    outside every modality only form Boolean combinations and are free."""
    return DepthMetrics(1 + _outer_negations(phi), _opdepth(phi))


def _opdepth(phi) -> int:
    below = max((_opdepth(c) for c in children(phi)), default=0)
    return below + isinstance(phi, Modal)


def _outer_negations(phi) -> int:
    if isinstance(phi, Modal):
        return _negdepth(phi)
    return max((_outer_negations(c) for c in children(phi)), default=0)


def _negdepth(phi) -> int:
    below = max((_negdepth(c) for c in children(phi)), default=0)
    return below + isinstance(phi, TNot)
