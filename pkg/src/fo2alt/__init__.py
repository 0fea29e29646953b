"""Decision procedures for the FO2[<, suc] quantifier alternation hierarchy."""
from .automata import Dfa, compile_regex, parse_regex, syntactic_presentation
from .hierarchy import ABOVE_BOUND, INCONCLUSIVE, NOT_DEFINABLE, ClassificationReport, classify, classify_regex
from .omega import level_identity, parse_term, satisfies
from .semigroup import Semigroup, green, idempotents, is_lda, omega_power

__all__ = [
    "ABOVE_BOUND", "INCONCLUSIVE", "NOT_DEFINABLE", "ClassificationReport", "Dfa",
    "Semigroup", "classify", "classify_regex", "compile_regex", "green", "idempotents",
    "is_lda", "level_identity", "omega_power", "parse_regex", "parse_term", "satisfies",
    "syntactic_presentation",
]
