"""The finite-index congruence ``u ~(m,n) v`` on words, decided by brute force.

Results are cached in a process-wide ``lru_cache``; concurrent callers may
compute an entry twice but always insert the same value.
"""
from __future__ import annotations

from functools import lru_cache

from ..words import bounded_prefix, bounded_suffix, factor_alphabet, monomial_profile

MAX_WORD_LENGTH = 64


def approx_equiv(u: str, v: str, m: int, n: int) -> bool:
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    if max(len(u), len(v)) > MAX_WORD_LENGTH:
        raise ValueError(f"words longer than {MAX_WORD_LENGTH} are not supported")
    return _approx(*sorted((u, v)), m, n)


def _eq(u: str, v: str, m: int, n: int) -> bool:
    return _approx(*sorted((u, v)), m, n)


@lru_cache(maxsize=1 << 20)
def _approx(u: str, v: str, m: int, n: int) -> bool:
    if m == 0 or n == 0 or u == v:
        return True
    if m == 1:
        return monomial_profile(u, n) == monomial_profile(v, n)
    for k in range(1, n + 1):
        if (factor_alphabet(u, k) != factor_alphabet(v, k)
                or bounded_prefix(u, k) != bounded_prefix(v, k)
                or bounded_suffix(u, k) != bounded_suffix(v, k)):
            return False
    factors = [w for k in range(1, n + 1) for w in sorted(factor_alphabet(u, k))]
    for w in factors:
        k = len(w)
        # first occurrence
        i, j = u.find(w), v.find(w)
        if not (_eq(u[:i], v[:j], m - 1, n - k) and _eq(u[i + k:], v[j + k:], m, n - k)):
            return False
        # last occurrence
        i, j = u.rfind(w), v.rfind(w)
        if not (_eq(u[:i], v[:j], m, n - k) and _eq(u[i + k:], v[j + k:], m - 1, n - k)):
            return False
    for w in factors:
        for w2 in factors:
            k = len(w) + len(w2)
            if k > n:
                continue
            lu, fu = u.rfind(w) + len(w), u.find(w2)
            lv, fv = v.rfind(w) + len(w), v.find(w2)
            # last w must end before the first w2 begins, in both words
            if lu <= fu and lv <= fv:
                if not _eq(u[lu:fu], v[lv:fv], m - 1, n - k):
                    return False
    return True
