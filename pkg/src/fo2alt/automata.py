"""Regular expressions, canonical minimal DFAs and syntactic semigroups.

Languages live in A+; an empty word accepted by a regex is dropped.
"""
from __future__ import annotations

import json
import warnings
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .semigroup import Semigroup, from_transformations
from .words import Alphabet

OPERATORS = set("|*+?()")


class RegexSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


# regex AST

@dataclass(frozen=True)
class Sym:
    symbol: str


@dataclass(frozen=True)
class Concat:
    parts: tuple


@dataclass(frozen=True)
class Union:
    parts: tuple


@dataclass(frozen=True)
class Star:
    inner: object


@dataclass(frozen=True)
class Plus:
    inner: object


@dataclass(frozen=True)
class Optional:
    inner: object


@dataclass(frozen=True)
class Regex:
    root: object
    alphabet: Alphabet
    text: str = ""


class _RegexParser:
    def __init__(self, text: str, alphabet: Alphabet):
        self.text = text
        self.alphabet = alphabet
        self.pos = 0

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else None

    def parse(self):
        if self.peek() is None:
            raise RegexSyntaxError("empty regular expression", 0)
        node = self.alt()
        if self.peek() is not None:
            c = self.peek()
            if c == ")":
                raise RegexSyntaxError("unbalanced ')'", self.pos)
            raise RegexSyntaxError(f"unexpected {c!r}", self.pos)
        return node

    def alt(self):
        parts = [self.cat()]
        while self.peek() == "|":
            self.pos += 1
            parts.append(self.cat())
        return parts[0] if len(parts) == 1 else Union(tuple(parts))

    def cat(self):
        parts = []
        while (c := self.peek()) is not None and c not in "|)":
            parts.append(self.rep())
        if not parts:
            raise RegexSyntaxError("expected an expression", self.pos)
        return parts[0] if len(parts) == 1 else Concat(tuple(parts))

    def rep(self):
        node = self.atom()
        while (c := self.peek()) is not None and c in "*+?":
            self.pos += 1
            node = {"*": Star, "+": Plus, "?": Optional}[c](node)
        return node

    def atom(self):
        c = self.peek()
        start = self.pos
        if c == "(":
            self.pos += 1
            node = self.alt()
            if self.peek() != ")":
                raise RegexSyntaxError("unbalanced '('", start)
            self.pos += 1
            return node
        if c in ("*", "+", "?"):
            raise RegexSyntaxError(f"dangling postfix operator {c!r}", start)
        if c not in self.alphabet:
            raise RegexSyntaxError(f"unknown symbol {c!r}", start)
        self.pos += 1
        return Sym(c)


def parse_regex(text: str, alphabet: Iterable[str] | None = None) -> Regex:
    if alphabet is None:
        letters = [c for c in text if c not in OPERATORS and not c.isspace()]
        if not letters:
            raise RegexSyntaxError("regular expression has no symbols", 0)
        alphabet = Alphabet.of("".join(letters))
    elif not isinstance(alphabet, Alphabet):
        alphabet = Alphabet(alphabet)
    return Regex(_RegexParser(text, alphabet).parse(), alphabet, text)


# Thompson construction

class _Nfa:
    def __init__(self):
        self.eps: list[list[int]] = []
        self.moves: list[dict[str, list[int]]] = []

    def state(self) -> int:
        self.eps.append([])
        self.moves.append({})
        return len(self.eps) - 1

    def build(self, node) -> tuple[int, int]:
        if isinstance(node, Sym):
            s, t = self.state(), self.state()
            self.moves[s].setdefault(node.symbol, []).append(t)
            return s, t
        if isinstance(node, Concat):
            s, t = self.build(node.parts[0])
            for part in node.parts[1:]:
                s2, t2 = self.build(part)
                self.eps[t].append(s2)
                t = t2
            return s, t
        if isinstance(node, Union):
            s, t = self.state(), self.state()
            for part in node.parts:
                s2, t2 = self.build(part)
                self.eps[s].append(s2)
                self.eps[t2].append(t)
            return s, t
        s2, t2 = self.build(node.inner)
        s, t = self.state(), self.state()
        self.eps[s].append(s2)
        self.eps[t2].append(t)
        if isinstance(node, (Star, Optional)):
            self.eps[s].append(t)
        if isinstance(node, (Star, Plus)):
            self.eps[t2].append(s2)
        return s, t

    def closure(self, states: Iterable[int]) -> frozenset[int]:
        stack = list(states)
        seen = set(stack)
        while stack:
            q = stack.pop()
            for r in self.eps[q]:
                if r not in seen:
                    seen.add(r)
                    stack.append(r)
        return frozenset(seen)


@dataclass(frozen=True)
class Dfa:
    """A complete DFA; ``transitions[a][q]`` is the successor of ``q`` on ``a``."""

    alphabet: Alphabet
    states: int
    initial: int
    accepting: frozenset[int]
    transitions: dict

    def __post_init__(self):
        if not isinstance(self.alphabet, Alphabet):
            object.__setattr__(self, "alphabet", Alphabet(self.alphabet))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        if not 0 <= self.initial < self.states:
            raise ValueError("initial state out of range")
        if not self.accepting <= frozenset(range(self.states)):
            raise ValueError("accepting state out of range")
        trans = {}
        for a in self.alphabet:
            row = self.transitions.get(a)
            if row is None or len(row) != self.states:
                raise ValueError(f"transition array for {a!r} must have length {self.states}")
            if any(not 0 <= q < self.states for q in row):
                raise ValueError(f"transition target out of range for {a!r}")
            trans[a] = tuple(int(q) for q in row)
        if set(self.transitions) - set(self.alphabet):
            raise ValueError("transitions mention symbols outside the alphabet")
        object.__setattr__(self, "transitions", trans)

    def step(self, q: int, a: str) -> int:
        return self.transitions[a][q]

    def to_dict(self) -> dict:
        return {
            "alphabet": list(self.alphabet),
            "states": self.states,
            "initial": self.initial,
            "accepting": sorted(self.accepting),
            "transitions": {a: list(self.transitions[a]) for a in self.alphabet},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Dfa":
        try:
            return cls(Alphabet(data["alphabet"]), int(data["states"]), int(data["initial"]),
                       frozenset(data["accepting"]), dict(data["transitions"]))
        except KeyError as exc:
            raise ValueError(f"DFA JSON is missing field {exc.args[0]!r}") from None

    @classmethod
    def from_json(cls, text: str) -> "Dfa":
        return cls.from_dict(json.loads(text))


def accepts(d: Dfa, u: str) -> bool:
    d.alphabet.check(u)
    q = d.initial
    for a in u:
        q = d.transitions[a][q]
    return q in d.accepting


def _determinize(r: Regex) -> tuple[list[dict[str, int]], set[int]]:
    nfa = _Nfa()
    start, final = nfa.build(r.root)
    first = nfa.closure([start])
    index = {first: 0}
    order = [first]
    delta: list[dict[str, int]] = []
    i = 0
    while i < len(order):
        cur = order[i]
        row = {}
        for a in r.alphabet:
            nxt = nfa.closure(t for q in cur for t in nfa.moves[q].get(a, ()))
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
            row[a] = index[nxt]
        delta.append(row)
        i += 1
    accepting = {i for i, s in enumerate(order) if final in s}
    return delta, accepting


def minimize(alphabet: Alphabet, delta: list[dict[str, int]], initial: int,
             accepting: set[int]) -> Dfa:
    """Moore partition refinement followed by canonical BFS renumbering."""
    # restrict to reachable states
    reach = {initial}
    queue = deque([initial])
    while queue:
        q = queue.popleft()
        for a in alphabet:
            t = delta[q][a]
            if t not in reach:
                reach.add(t)
                queue.append(t)
    block = {q: int(q in accepting) for q in reach}
    while True:
        sig = {q: (block[q],) + tuple(block[delta[q][a]] for a in alphabet) for q in reach}
        ids: dict[tuple, int] = {}
        new = {q: ids.setdefault(sig[q], len(ids)) for q in sorted(reach)}
        if len(ids) == len(set(block.values())):
            break
        block = new
    # canonical numbering: BFS from the initial block, symbols in alphabet order
    rep = {}
    for q in sorted(reach):
        rep.setdefault(block[q], q)
    number = {block[initial]: 0}
    order = [block[initial]]
    i = 0
    while i < len(order):
        b = order[i]
        for a in alphabet:
            t = block[delta[rep[b]][a]]
            if t not in number:
                number[t] = len(order)
                order.append(t)
        i += 1
    trans = {a: [number[block[delta[rep[b]][a]]] for b in order] for a in alphabet}
    acc = frozenset(number[b] for b in order if rep[b] in accepting)
    return Dfa(alphabet, len(order), 0, acc, trans)


def compile_regex(r: Regex | str, alphabet: Iterable[str] | None = None) -> Dfa:
    """Canonical minimal complete DFA for ``L(r)`` intersected with A+."""
    if isinstance(r, str):
        r = parse_regex(r, alphabet)
    delta, accepting = _determinize(r)
    if 0 in accepting:
        warnings.warn(f"the empty word is accepted by {r.text or 'the regex'!r}; "
                      "it is dropped (languages are taken in A+)", stacklevel=2)
        # fresh non-accepting copy of the initial state
        delta.append(dict(delta[0]))
        initial = len(delta) - 1
    else:
        initial = 0
    return minimize(r.alphabet, delta, initial, accepting)


def normalize_dfa(d: Dfa) -> Dfa:
    """Minimize and renumber an arbitrary complete DFA; drops the empty word."""
    delta = [{a: d.transitions[a][q] for a in d.alphabet} for q in range(d.states)]
    accepting = set(d.accepting)
    initial = d.initial
    if initial in accepting:
        warnings.warn("the DFA accepts the empty word; it is dropped (languages are taken in A+)",
                      stacklevel=2)
        delta.append(dict(delta[initial]))
        initial = len(delta) - 1
    return minimize(d.alphabet, delta, initial, accepting)


@dataclass(frozen=True)
class SyntacticPresentation:
    semigroup: Semigroup
    letter_map: dict
    image: frozenset[int]
    transformations: tuple[tuple[int, ...], ...]
    dfa: Dfa

    def evaluate(self, u: str) -> int:
        """Image of a nonempty word under the syntactic morphism."""
        if not u:
            raise ValueError("the syntactic morphism is defined on nonempty words")
        self.dfa.alphabet.check(u)
        return self.semigroup.product(self.letter_map[a] for a in u)

    def to_dict(self) -> dict:
        return {
            "semigroup": self.semigroup.to_dict(),
            "letter_map": {a: self.letter_map[a] for a in self.dfa.alphabet},
            "image": sorted(self.image),
        }


def syntactic_presentation(d: Dfa) -> SyntacticPresentation:
    """Transition semigroup of the minimal DFA together with the image of L."""
    maps = [d.transitions[a] for a in d.alphabet]
    S, genmap, elems = from_transformations(maps, list(d.alphabet))
    image = frozenset(i for i, t in enumerate(elems) if t[d.initial] in d.accepting)
    return SyntacticPresentation(S, genmap, image, tuple(elems), d)
