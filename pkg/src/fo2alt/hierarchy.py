"""Classification of a regular language in the FO2_m[<, suc] hierarchy.

A language is FO2[<, suc]-definable iff its syntactic semigroup is in LDA.
Level 1 additionally asks the image of the language to be a union of
J-classes; level m >= 2 is the identity U_m = V_m alone. Levels are checked
independently and all verdicts are reported.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .automata import Dfa, compile_regex, syntactic_presentation
from .omega import DEFAULT_BUDGET, IdentityVerdict, level_identity, satisfies
from .semigroup import Semigroup, green, is_lda, is_union_of_j_classes

NOT_DEFINABLE = "NOT_DEFINABLE"
ABOVE_BOUND = "ABOVE_BOUND"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class LevelVerdict:
    level: int
    identity: IdentityVerdict
    j_union: bool | None = None      # level 1 only

    @property
    def status(self) -> str:
        if self.identity.status == "fails" or self.j_union is False:
            return "fails"
        if self.identity.status == "inconclusive":
            return "inconclusive"
        return "holds"

    def to_dict(self, S: Semigroup | None = None) -> dict:
        out = {"level": self.level, "status": self.status, "identity": self.identity.to_dict(S)}
        if self.level == 1:
            out["j_union"] = self.j_union
        return out


def check_level(S: Semigroup, image, m: int, budget: int = DEFAULT_BUDGET,
                green_data=None) -> LevelVerdict:
    if m < 1:
        raise ValueError("level must be at least 1")
    U, V = level_identity(m)
    verdict = satisfies(S, U, V, budget=budget)
    if m == 1:
        return LevelVerdict(1, verdict, is_union_of_j_classes(S, image, green_data))
    return LevelVerdict(m, verdict)


@dataclass
class ClassificationReport:
    source: str
    alphabet: tuple[str, ...]
    semigroup: Semigroup
    image: frozenset[int]
    lda: bool
    levels: list[LevelVerdict] = field(default_factory=list)
    max_m: int = 3

    @property
    def minimal_level(self):
        """Least granted level, provided every lower level definitely fails."""
        if not self.lda:
            return NOT_DEFINABLE
        for v in self.levels:
            if v.status == "holds":
                return v.level
            if v.status == "inconclusive":
                return INCONCLUSIVE
        return ABOVE_BOUND

    @property
    def upper_bound(self) -> int | None:
        return next((v.level for v in self.levels if v.status == "holds"), None)

    @property
    def conclusive(self) -> bool:
        return self.minimal_level != INCONCLUSIVE

    def to_dict(self) -> dict:
        S = self.semigroup
        return {
            "language": {"source": self.source, "alphabet": list(self.alphabet)},
            "semigroup_order": S.order,
            "elements": list(S.names),
            "image": [S.names[x] for x in sorted(self.image)],
            "lda": self.lda,
            "max_m": self.max_m,
            "levels": [v.to_dict(S) for v in self.levels],
            "minimal_level": self.minimal_level,
            "upper_bound": self.upper_bound,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        S = self.semigroup
        lines = [
            f"language: {self.source} over {{{','.join(self.alphabet)}}}",
            f"syntactic semigroup order: {S.order}",
            f"image: {{{', '.join(S.names[x] for x in sorted(self.image))}}}",
            f"LDA (FO2[<,suc]-definable): {'yes' if self.lda else 'no'}",
        ]
        for v in self.levels:
            line = f"level {v.level}: {v.status}"
            parts = [f"identity {v.identity.status}"]
            if v.level == 1:
                parts.append(f"J-union {'yes' if v.j_union else 'no'}")
            if v.identity.counterexample:
                h = ", ".join(f"{k}={S.names[x]}" for k, x in v.identity.counterexample.items())
                parts.append(f"counterexample {h}")
            if v.identity.reason:
                parts.append(v.identity.reason)
            lines.append(f"{line} ({'; '.join(parts)})")
        lines.append(f"minimal level: {self.minimal_level}")
        return "\n".join(lines)


def classify(d: Dfa, max_m: int = 3, budget: int = DEFAULT_BUDGET,
             source: str = "dfa") -> ClassificationReport:
    if max_m < 1:
        raise ValueError("max_m must be at least 1")
    pres = syntactic_presentation(d)
    S = pres.semigroup
    report = ClassificationReport(source, tuple(d.alphabet), S, pres.image, is_lda(S), max_m=max_m)
    if not report.lda:
        return report
    g = green(S)
    for m in range(1, max_m + 1):
        report.levels.append(check_level(S, pres.image, m, budget, g))
    return report


def classify_regex(text: str, alphabet=None, max_m: int = 3,
                   budget: int = DEFAULT_BUDGET) -> ClassificationReport:
    return classify(compile_regex(text, alphabet), max_m, budget, source=text)
