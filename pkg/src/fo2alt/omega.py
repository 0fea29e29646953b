"""Omega-terms, the U_m / V_m identities and exhaustive identity checking."""
from __future__ import annotations

import itertools
import logging
import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping

import numpy as np

from .semigroup import Semigroup

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**9
CHUNK_SIZE = 1 << 20


class TermSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class _Node:
    __slots__ = ()

    def __hash__(self):
        return self._hash

    def __str__(self):
        return _show(self)


@dataclass(frozen=True, eq=True)
class Var(_Node):
    name: str

    @cached_property
    def _hash(self):
        return hash(("var", self.name))

    @cached_property
    def free(self) -> frozenset[str]:
        return frozenset((self.name,))


@dataclass(frozen=True, eq=True)
class Concat(_Node):
    children: tuple

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("a concatenation needs at least two factors")
        object.__setattr__(self, "children", tuple(self.children))

    @cached_property
    def _hash(self):
        return hash(("cat",) + self.children)

    @cached_property
    def free(self) -> frozenset[str]:
        return frozenset().union(*(c.free for c in self.children))


@dataclass(frozen=True, eq=True)
class Omega(_Node):
    child: object

    @cached_property
    def _hash(self):
        return hash(("omega", self.child))

    @cached_property
    def free(self) -> frozenset[str]:
        return self.child.free


OmegaTerm = (Var, Concat, Omega)

# dataclass(eq=True) would reset __hash__; restore the cached one
for _cls in OmegaTerm:
    _cls.__hash__ = _Node.__hash__


def cat(*parts) -> object:
    return parts[0] if len(parts) == 1 else Concat(parts)


def _flat(t) -> list:
    if isinstance(t, Concat):
        return [x for c in t.children for x in _flat(c)]
    return [t]


def _show(t) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Omega):
        inner = t.child
        if isinstance(inner, Var):
            return f"{inner.name}^w"
        return f"({_show(inner)})^w"
    return " ".join(_show(c) for c in _flat(t))


# parsing

_TOKEN = re.compile(r"\s*(?:(?P<var>[a-z][a-z0-9_]*)|(?P<omega>\^w)|(?P<lp>\()|(?P<rp>\)))")


def parse_term(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            at = len(text) - len(text[pos:].lstrip())
            raise TermSyntaxError(f"unexpected {text[at]!r}", at)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    i = 0

    def term():
        nonlocal i
        parts = []
        while tokens[i][0] in ("var", "lp"):
            parts.append(factor())
        if not parts:
            kind, val, at = tokens[i]
            raise TermSyntaxError("expected a variable or '('" if kind == "end" else f"unexpected {val!r}", at)
        return cat(*parts)

    def factor():
        nonlocal i
        kind, val, at = tokens[i]
        if kind == "var":
            i += 1
            node = Var(val)
        else:
            i += 1
            node = term()
            if tokens[i][0] != "rp":
                raise TermSyntaxError("unbalanced '('", at)
            i += 1
        while tokens[i][0] == "omega":
            i += 1
            node = Omega(node)
        return node

    result = term()
    if tokens[i][0] != "end":
        kind, val, at = tokens[i]
        raise TermSyntaxError(f"unexpected {val!r}", at)
    return result


def variables(*terms) -> tuple[str, ...]:
    """Variables in order of first occurrence, scanning terms left to right."""
    seen: dict[str, None] = {}

    def walk(t):
        if isinstance(t, Var):
            seen.setdefault(t.name)
        elif isinstance(t, Omega):
            walk(t.child)
        else:
            for c in t.children:
                walk(c)

    for t in terms:
        walk(t)
    return tuple(seen)


def omega_only_variables(*terms) -> frozenset[str]:
    """Variables that occur only as the immediate argument of an omega-power."""
    bare: set[str] = set()
    wrapped: set[str] = set()

    def walk(t, under_omega):
        if isinstance(t, Var):
            (wrapped if under_omega else bare).add(t.name)
        elif isinstance(t, Omega):
            walk(t.child, True)
        else:
            for c in t.children:
                walk(c, False)

    for t in terms:
        walk(t, False)
    return frozenset(wrapped - bare)


# the level identities

def level_identity(m: int):
    """The pair (U_m, V_m).

    The shared block ``p_m U_{m-1} q_m`` is built once so that evaluation
    can reuse it.
    """
    if m < 1:
        raise ValueError("level must be at least 1")
    e, f, s, t = (Omega(Var("e")), Omega(Var("f")), Var("s"), Var("t"))
    x, y = Var("x1"), Var("y1")
    left = Omega(Concat((e, s, f, x, e)))
    right = Omega(Concat((f, y, e, t, f)))
    U, V = Concat((left, s, right)), Concat((left, t, right))
    for i in range(2, m + 1):
        p, q, x, y = (Var(f"{c}{i}") for c in "pqxy")
        mid = Concat((p, U, q))
        left = Omega(Concat((mid, x)))
        right = Omega(Concat((y, mid)))
        U, V = Concat((left, mid, right)), Concat((left, Concat((p, V, q)), right))
    return U, V


# evaluation

def evaluate(t, h: Mapping[str, int], S: Semigroup, memo: dict | None = None) -> int:
    memo = {} if memo is None else memo
    table, omega = S.table, S.omega_table

    def ev(node):
        if node in memo:
            return memo[node]
        if isinstance(node, Var):
            try:
                val = h[node.name]
            except KeyError:
                raise ValueError(f"variable {node.name!r} is unassigned") from None
            if not 0 <= val < S.order:
                raise ValueError(f"value {val} for {node.name!r} is not an element")
        elif isinstance(node, Omega):
            val = omega[ev(node.child)]
        else:
            it = iter(node.children)
            val = ev(next(it))
            for c in it:
                val = table[val][ev(c)]
        memo[node] = val
        return val

    return ev(t)


@dataclass(frozen=True)
class IdentityVerdict:
    status: str                      # "holds", "fails" or "inconclusive"
    counterexample: dict | None = None
    lhs_value: int | None = None
    rhs_value: int | None = None
    assignments: int = 0             # size of the searched assignment space
    reason: str = ""

    @property
    def holds(self) -> bool | None:
        return {"holds": True, "fails": False}.get(self.status)

    @property
    def conclusive(self) -> bool:
        return self.status != "inconclusive"

    def to_dict(self, S: Semigroup | None = None) -> dict:
        out: dict = {"status": self.status, "assignments": self.assignments}
        if self.counterexample is not None:
            out["counterexample"] = dict(self.counterexample)
            out["lhs_value"] = self.lhs_value
            out["rhs_value"] = self.rhs_value
            if S is not None:
                out["counterexample_names"] = {v: S.names[x] for v, x in self.counterexample.items()}
                out["lhs_name"] = S.names[self.lhs_value]
                out["rhs_name"] = S.names[self.rhs_value]
        if self.reason:
            out["reason"] = self.reason
        return out


def search_space(S: Semigroup, lhs, rhs) -> int:
    restricted = omega_only_variables(lhs, rhs)
    sizes = [len(S.idempotents) if v in restricted else S.order for v in variables(lhs, rhs)]
    return math.prod(sizes)


def satisfies(S: Semigroup, lhs, rhs, budget: int = DEFAULT_BUDGET,
              chunk_size: int = CHUNK_SIZE) -> IdentityVerdict:
    """Exhaustively decide whether ``S`` satisfies ``lhs = rhs``.

    Variables wrapped in omega-powers everywhere range over idempotents
    only. Assignments are enumerated lexicographically, variables in
    first-occurrence order, so the reported counterexample is the first one.
    Each subterm is evaluated once per chunk as an array broadcast over
    the axes of the variables it mentions.
    """
    order = variables(lhs, rhs)
    restricted = omega_only_variables(lhs, rhs)
    # index arithmetic x*n + y must fit the dtype
    dtype = np.int16 if S.order * S.order < 2**15 else np.int32 if S.order < 2**15 else np.int64
    idem = np.array(S.idempotents, dtype=dtype)
    full = np.arange(S.order, dtype=dtype)
    domains = [idem if v in restricted else full for v in order]
    sizes = [len(d) for d in domains]
    total = math.prod(sizes)
    if total > budget:
        return IdentityVerdict("inconclusive", assignments=total,
                               reason=f"budget: {total} assignments exceed the budget of {budget}")

    lead = 0
    while lead < len(order) and math.prod(sizes[lead:]) > chunk_size:
        lead += 1
    inner_shape = tuple(sizes[lead:])
    ndim = len(inner_shape)
    leading = frozenset(order[:lead])
    n = dtype(S.order)
    flat_table = S.array.ravel().astype(dtype)
    omega_arr = np.array(S.omega_table, dtype=dtype)
    static: dict = {}
    env: dict[str, np.ndarray] = {}
    for i in range(lead, len(order)):
        shape = [1] * ndim
        shape[i - lead] = sizes[i]
        env[order[i]] = domains[i].reshape(shape)

    def ev(node, memo):
        cache = memo if node.free & leading else static
        val = cache.get(node)
        if val is not None:
            return val
        if isinstance(node, Var):
            val = env[node.name]
        elif isinstance(node, Omega):
            val = omega_arr[ev(node.child, memo)]
        else:
            it = iter(node.children)
            val = ev(next(it), memo)
            for c in it:
                val = flat_table[val * n + ev(c, memo)]
        cache[node] = val
        return val

    chunks = itertools.product(*(range(s) for s in sizes[:lead]))
    for k, fixed in enumerate(chunks):
        for i, j in enumerate(fixed):
            env[order[i]] = np.full((1,) * ndim, domains[i][j], dtype=dtype)
        memo: dict = {}
        a, b = ev(lhs, memo), ev(rhs, memo)
        diff = a != b
        if diff.any():
            diff = np.broadcast_to(diff, inner_shape)
            at = np.unravel_index(int(np.argmax(diff)), inner_shape)
            h = {order[i]: int(domains[i][j]) for i, j in enumerate(fixed)}
            h.update({order[lead + i]: int(domains[lead + i][j]) for i, j in enumerate(at)})
            return IdentityVerdict("fails", h, evaluate(lhs, h, S), evaluate(rhs, h, S), total)
        if lead and k % 64 == 63:
            log.debug("identity check: %d chunks of %d done", k + 1, math.prod(sizes[:lead]))
    return IdentityVerdict("holds", assignments=total)
