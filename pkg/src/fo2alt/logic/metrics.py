from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class DepthMetrics:
    """``m``: alternation depth (FO2) or negation class (TL);
    ``n``: quantifier depth (FO2) or operator depth (TL)."""

    m: int
    n: int

    def to_dict(self) -> dict:
        return {"m": self.m, "n": self.n}
