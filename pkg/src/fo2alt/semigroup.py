"""Finite semigroups given by multiplication tables.

Elements are the integers ``0 .. order-1``; ``table[x][y]`` is ``x*y``.
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


class SemigroupError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Semigroup:
    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] = ()
    validate: bool = field(default=True, repr=False)

    def __post_init__(self):
        table = tuple(tuple(int(v) for v in row) for row in self.table)
        n = len(table)
        if n == 0:
            raise SemigroupError("semigroups are nonempty")
        for x, row in enumerate(table):
            if len(row) != n:
                raise SemigroupError(f"row {x} has length {len(row)}, expected {n}")
            for v in row:
                if not 0 <= v < n:
                    raise SemigroupError(f"table entry {v} in row {x} is out of range")
        object.__setattr__(self, "table", table)
        names = tuple(self.names) if self.names else tuple(str(i) for i in range(n))
        if len(names) != n:
            raise SemigroupError("names must match the order")
        object.__setattr__(self, "names", names)
        if self.validate:
            bad = find_associativity_violation(table)
            if bad is not None:
                x, y, z = bad
                raise SemigroupError(
                    f"table is not associative: ({x}*{y})*{z} = {table[table[x][y]][z]} "
                    f"but {x}*({y}*{z}) = {table[x][table[y][z]]}")

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return len(self.table)

    def __eq__(self, other) -> bool:
        return isinstance(other, Semigroup) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.table, dtype=np.int64)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def product(self, elements: Iterable[int]) -> int:
        it = iter(elements)
        acc = next(it)
        for y in it:
            acc = self.table[acc][y]
        return acc

    def power(self, x: int, k: int) -> int:
        acc = x
        for _ in range(k - 1):
            acc = self.table[acc][x]
        return acc

    @cached_property
    def omega_table(self) -> tuple[int, ...]:
        return tuple(omega_power(self, x) for x in range(self.order))

    @cached_property
    def idempotents(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.order) if self.table[x][x] == x)

    # serialization

    def to_dict(self) -> dict:
        return {"order": self.order, "table": [list(r) for r in self.table], "names": list(self.names)}

    @classmethod
    def from_dict(cls, data: dict) -> "Semigroup":
        try:
            table = data["table"]
        except (KeyError, TypeError):
            raise SemigroupError("semigroup JSON needs a 'table' field") from None
        order = data.get("order", len(table))
        if order != len(table):
            raise SemigroupError(f"order {order} does not match table size {len(table)}")
        return cls(table, tuple(data.get("names") or ()))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "Semigroup":
        return cls.from_dict(json.loads(text))


def find_associativity_violation(table: Sequence[Sequence[int]]):
    n = len(table)
    t = np.asarray(table, dtype=np.int64)
    left = t[t, :]                  # left[x, y, z] = t[t[x, y], z]
    right = t[:, t]                 # right[x, y, z] = t[x, t[y, z]]
    bad = np.argwhere(left != right)
    if len(bad):
        x, y, z = (int(v) for v in bad[0])
        return x, y, z
    return None


def idempotents(S: Semigroup) -> frozenset[int]:
    return frozenset(S.idempotents)


def omega_power(S: Semigroup, x: int) -> int:
    """The unique idempotent power of ``x``.

    Walks ``x, x^2, ...`` until a repeat; with index ``i`` and period ``p``
    the idempotent is ``x^k`` for the ``k`` in ``[i, i+p)`` divisible by ``p``.
    """
    seen: dict[int, int] = {}
    powers = []
    acc, k = x, 1
    while acc not in seen:
        seen[acc] = k
        powers.append(acc)
        acc = S.table[acc][x]
        k += 1
    index = seen[acc]
    period = k - index
    k = -(-index // period) * period
    return powers[k - 1]


def from_transformations(maps: Sequence[Sequence[int]], labels: Sequence[str] | None = None):
    """Close a list of transformations of ``{0..n-1}`` under composition.

    Composition reads left to right: the word ``uv`` first applies ``u``.
    Elements are numbered by the shortlex-least word producing them.
    Returns ``(semigroup, generator_map, transformations)``.
    """
    if not maps:
        raise SemigroupError("need at least one generator")
    gens = [tuple(int(v) for v in m) for m in maps]
    width = len(gens[0])
    if any(len(g) != width for g in gens):
        raise SemigroupError("all transformations must share one domain")
    if labels is None:
        labels = [str(i) for i in range(len(gens))]
    if len(labels) != len(gens):
        raise SemigroupError("one label per generator")

    index: dict[tuple[int, ...], int] = {}
    elems: list[tuple[int, ...]] = []
    words: list[str] = []
    for g, lab in zip(gens, labels):
        if g not in index:
            index[g] = len(elems)
            elems.append(g)
            words.append(lab)
    genmap = {lab: index[g] for g, lab in zip(gens, labels)}
    distinct_gens = [(lab, g) for g, lab in zip(gens, labels)]
    i = 0
    while i < len(elems):
        t = elems[i]
        for lab, g in distinct_gens:
            c = tuple(g[q] for q in t)
            if c not in index:
                index[c] = len(elems)
                elems.append(c)
                words.append(words[i] + lab)
        i += 1
    table = [[index[tuple(b[q] for q in a)] for b in elems] for a in elems]
    return Semigroup(table, tuple(words), validate=False), genmap, elems


@dataclass(frozen=True)
class GreenData:
    leq_r: np.ndarray
    leq_l: np.ndarray
    leq_j: np.ndarray
    r_classes: tuple[frozenset[int], ...]
    l_classes: tuple[frozenset[int], ...]
    j_classes: tuple[frozenset[int], ...]
    h_classes: tuple[frozenset[int], ...]

    def class_of(self, kind: str, x: int) -> frozenset[int]:
        classes = {"R": self.r_classes, "L": self.l_classes,
                   "J": self.j_classes, "H": self.h_classes}[kind]
        for c in classes:
            if x in c:
                return c
        raise KeyError(x)

    def related(self, kind: str, x: int, y: int) -> bool:
        if kind == "H":
            return self.related("R", x, y) and self.related("L", x, y)
        m = {"R": self.leq_r, "L": self.leq_l, "J": self.leq_j}[kind]
        return bool(m[x, y] and m[y, x])


def _classes(leq: np.ndarray) -> tuple[frozenset[int], ...]:
    eq = leq & leq.T
    out, done = [], set()
    for x in range(len(leq)):
        if x in done:
            continue
        c = frozenset(np.flatnonzero(eq[x]).tolist())
        done |= c
        out.append(c)
    return tuple(out)


def green(S: Semigroup) -> GreenData:
    """Green's preorders and classes, computed in the monoid S^1."""
    t = S.array
    n = S.order
    eye = np.eye(n, dtype=bool)
    # rows indexed by y: membership of x in yS / Sy
    right = np.zeros((n, n), dtype=bool)
    left = np.zeros((n, n), dtype=bool)
    for y in range(n):
        right[y, t[y, :]] = True
        left[y, t[:, y]] = True
    right |= eye
    left |= eye
    # S^1 y S^1 = union over l in S^1 of l (y S^1)
    two = right.copy()
    for y in range(n):
        ideal = np.flatnonzero(right[y])
        two[y, t[:, ideal].ravel()] = True
    leq_r, leq_l, leq_j = right.T.copy(), left.T.copy(), two.T.copy()
    r, l, j = _classes(leq_r), _classes(leq_l), _classes(leq_j)
    h = tuple(frozenset(a & b) for a in r for b in l if a & b)
    h = tuple(sorted(h, key=min))
    return GreenData(leq_r, leq_l, leq_j, r, l, j, h)


def local_monoid_support(S: Semigroup, e: int) -> tuple[int, ...]:
    if S.table[e][e] != e:
        raise SemigroupError(f"element {S.names[e]} is not idempotent")
    return tuple(sorted({S.table[S.table[e][x]][e] for x in range(S.order)}))


def local_monoid(S: Semigroup, e: int) -> Semigroup:
    """The local monoid ``eSe``; element ``i`` is ``local_monoid_support(S, e)[i]``."""
    support = local_monoid_support(S, e)
    pos = {x: i for i, x in enumerate(support)}
    table = [[pos[S.table[x][y]] for y in support] for x in support]
    return Semigroup(table, tuple(S.names[x] for x in support), validate=False)


def is_lda_global(S: Semigroup) -> bool:
    """(exeye)^w exe (exeye)^w = (exeye)^w for all e in E(S) and x, y in S."""
    t, om = S.table, S.omega_table
    for e in S.idempotents:
        ese = [t[t[e][x]][e] for x in range(S.order)]
        for exe in set(ese):
            for eye in set(ese):
                z = om[t[exe][eye]]
                if t[t[z][exe]][z] != z:
                    return False
    return True


def is_lda_local(S: Semigroup) -> bool:
    """Every local monoid satisfies (xy)^w x (xy)^w = (xy)^w."""
    for e in S.idempotents:
        M = local_monoid(S, e)
        t, om = M.table, M.omega_table
        for x in range(M.order):
            for y in range(M.order):
                z = om[t[x][y]]
                if t[t[z][x]][z] != z:
                    return False
    return True


def is_lda(S: Semigroup) -> bool:
    verdict = is_lda_global(S)
    if __debug__:
        assert verdict == is_lda_local(S), "LDA characterizations disagree"
    return verdict


def is_union_of_j_classes(S: Semigroup, subset: Iterable[int], green_data: GreenData | None = None) -> bool:
    subset = frozenset(subset)
    if not subset <= frozenset(range(S.order)):
        raise SemigroupError("subset contains elements outside the semigroup")
    g = green_data or green(S)
    return all(c <= subset or not (c & subset) for c in g.j_classes)


# small semigroups for property tests

def enumerate_semigroups(order: int) -> list[Semigroup]:
    """Every associative table on ``order`` labelled elements (order <= 3)."""
    if order > 3:
        raise ValueError("exhaustive enumeration is limited to order 3")
    out = []
    cells = order * order
    for flat in itertools.product(range(order), repeat=cells):
        table = [flat[i * order:(i + 1) * order] for i in range(order)]
        if find_associativity_violation(table) is None:
            out.append(Semigroup(table, validate=False))
    return out


def random_transition_semigroups(count: int, order: int = 4, states: int = 3,
                                 max_generators: int = 3, seed: int = 0,
                                 distinct: bool = False,
                                 max_tries: int = 200_000) -> list[Semigroup]:
    """Transition semigroups of random ``states``-state automata having
    exactly ``order`` elements.

    Few labelled tables of order 4 arise from 3-state automata, so samples
    repeat unless ``distinct`` is set (which may then return fewer).
    """
    rng = random.Random(seed)
    out, seen = [], set()
    for _ in range(max_tries):
        if len(out) >= count:
            break
        k = rng.randint(1, max_generators)
        maps = [[rng.randrange(states) for _ in range(states)] for _ in range(k)]
        S, _, _ = from_transformations(maps)
        if S.order != order or (distinct and S.table in seen):
            continue
        seen.add(S.table)
        out.append(S)
    return out
