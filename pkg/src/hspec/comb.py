"""Exact combinatorial quantities and two classical inequalities.

``alpha(s, m)`` is the number of surjections from an ``m``-set onto an
``s``-set, i.e. ``s! * S(m, s)`` with ``S`` a Stirling number of the second
kind. It normalizes both the edge polynomial and the adjacency tensor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb, factorial, prod

import numpy as np

from .errors import DimensionMismatch, InvalidArity, NonPositiveEntry, TooLarge

ORACLE_LIMIT = 2 * 10**7


@lru_cache(maxsize=None)
def alpha(s: int, m: int) -> int:
    """Surjection count by inclusion-exclusion, exact integer arithmetic."""
    if s < 1 or s > m:
        raise InvalidArity(f"alpha needs 1 <= s <= m, got s={s}, m={m}")
    return sum((-1) ** j * comb(s, j) * (s - j) ** m for j in range(s + 1))


def alpha_multinomial(s: int, m: int) -> int:
    """The same count as a sum of multinomials over compositions of ``m``
    into ``s`` positive parts. Exponential; kept as a cross-check."""
    if s < 1 or s > m:
        raise InvalidArity(f"alpha needs 1 <= s <= m, got s={s}, m={m}")
    total = 0
    # compositions of m into s positive parts <-> (s-1)-subsets of cut points
    for cuts in combinations(range(1, m), s - 1):
        bounds = (0,) + cuts + (m,)
        parts = [bounds[k + 1] - bounds[k] for k in range(s)]
        total += factorial(m) // prod(factorial(k) for k in parts)
    return total


def surjection_count_oracle(s: int, m: int) -> int:
    """Count the tuples in ``{0..s-1}^m`` that hit every element.

    Every tuple is enumerated; the array holds, per tuple, the bitmask of
    elements it covers.
    """
    if s < 1 or m < 1:
        raise InvalidArity(f"need s, m >= 1, got s={s}, m={m}")
    if s > m:
        return 0
    if s**m > ORACLE_LIMIT:
        raise TooLarge(f"{s}^{m} tuples exceed the enumeration limit")
    bits = np.left_shift(np.uint64(1), np.arange(s, dtype=np.uint64))
    covered = np.zeros(1, dtype=np.uint64)
    for _ in range(m):
        covered = (covered[:, None] | bits[None, :]).ravel()
    return int(np.count_nonzero(covered == np.uint64(2**s - 1)))


@dataclass(frozen=True)
class AlphaTable:
    m: int
    values: dict[int, int] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "values", {s: alpha(s, self.m) for s in range(1, self.m + 1)})

    def __getitem__(self, s: int) -> int:
        return self.values[s]


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def elementary_symmetric(x, k: int) -> float:
    """e_k(x) via the standard O(nk) recurrence."""
    x = np.asarray(x, dtype=float)
    e = np.zeros(k + 1)
    e[0] = 1.0
    for xi in x:
        e[1:] = e[1:] + xi * e[:-1]
    return float(e[k])


def symmetric_mean(x, k: int) -> float:
    """S_k = e_k(x) / C(n, k) for a positive vector ``x``."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise NonPositiveEntry("symmetric_mean requires strictly positive entries")
    n = x.size
    if not 1 <= k <= n:
        raise InvalidArity(f"k must lie in 1..{n}, got {k}")
    return elementary_symmetric(x, k) / comb(n, k)


def maclaurin_chain(x) -> np.ndarray:
    """The sequence S_1, S_2^(1/2), ..., S_n^(1/n); non-increasing."""
    x = np.asarray(x, dtype=float)
    return np.array([symmetric_mean(x, k) ** (1.0 / k) for k in range(1, x.size + 1)])


def holder_k_check(vectors) -> tuple[float, float]:
    """Both sides of sum_i prod_j x_i^(j) <= prod_j ||x^(j)||_k for k vectors."""
    vs = [np.asarray(v, dtype=float) for v in vectors]
    k = len(vs)
    if k < 2:
        raise InvalidArity("need at least two vectors")
    if len({v.shape for v in vs}) != 1 or vs[0].ndim != 1:
        raise DimensionMismatch("all vectors must be 1-D with equal length")
    lhs = float(np.sum(np.prod(np.vstack(vs), axis=0)))
    rhs = float(prod(np.sum(v**k) ** (1.0 / k) for v in vs))
    return lhs, rhs
