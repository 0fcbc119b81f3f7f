"""Exhaustive search for length-optimal codes at small k.

Candidates are systematic generator matrices [I | A]; searching these
is enough because any code can be brought to systematic form without
changing n, k, or servability. Parity columns run through all k-bit
values (zero included, so the candidate space is exactly the stated
matrix family) in increasing big-endian integer value, and tuples of
columns are nondecreasing, so the first passing matrix is a canonical,
reproducible witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import CapacityError
from .gf2 import BitMatrix, LinearCode, reverse_bits
from .planner import QueryPlanner

__all__ = ["SearchResult", "min_length", "redundancy_table"]

_MODES = ("batch", "pir")


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one optimal-length sweep.

    optimal_n is None when no code passed up to n_max; the sweep range
    k..n_max and the number of candidate matrices tested certify what
    was searched either way.
    """

    k: int
    t: int
    mode: str
    r_cap: int | None
    n_max: int
    optimal_n: int | None
    witness: LinearCode | None
    nodes_explored: int

    @property
    def redundancy(self) -> int | None:
        return None if self.optimal_n is None else self.optimal_n - self.k

    @property
    def found(self) -> bool:
        return self.optimal_n is not None


def min_length(
    k: int,
    t: int,
    mode: str = "batch",
    r_cap: int | None = None,
    n_max: int | None = None,
    *,
    max_k: int = 5,
    max_slack: int = 5,
) -> SearchResult:
    """Smallest n admitting a [n, k] code that serves every size-t query
    (mode "batch") or every uniform size-t query (mode "pir"), with
    recovery sets capped at r_cap columns when given.

    Sweeps n = k, k+1, ..., n_max (default k + max_slack). The guards
    max_k and max_slack bound the doubly exponential candidate space;
    raise them deliberately or not at all.
    """
    if mode not in _MODES:
        raise ValueError(f"mode must be one of {_MODES}, got {mode!r}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if r_cap is not None and r_cap < 1:
        raise ValueError(f"r_cap must be >= 1, got {r_cap}")
    if k > max_k:
        raise CapacityError(f"k = {k} exceeds the search guard max_k = {max_k}")
    if n_max is None:
        n_max = k + max_slack
    if n_max < k:
        raise ValueError(f"n_max = {n_max} is below k = {k}")
    if n_max - k > max_slack:
        raise CapacityError(
            f"n_max - k = {n_max - k} exceeds the search guard max_slack = {max_slack}"
        )

    nodes = 0
    for n in range(k, n_max + 1):
        for combo in combinations_with_replacement(range(1 << k), n - k):
            nodes += 1
            code = _systematic_candidate(k, combo)
            if _passes(code, t, mode, r_cap):
                return SearchResult(k, t, mode, r_cap, n_max, n, code, nodes)
    return SearchResult(k, t, mode, r_cap, n_max, None, None, nodes)


def _systematic_candidate(k: int, parity_values: tuple[int, ...]) -> LinearCode:
    rows = [1 << i for i in range(k)]
    for offset, value in enumerate(parity_values):
        word = reverse_bits(value, k)
        rest = word
        while rest:
            low = rest & -rest
            rows[low.bit_length() - 1] |= 1 << (k + offset)
            rest ^= low
    return LinearCode(BitMatrix(k + len(parity_values), tuple(rows)))


def _passes(code: LinearCode, t: int, mode: str, r_cap: int | None) -> bool:
    planner = QueryPlanner(code, r_cap)
    # Packing per symbol decides uniform queries; it is also a cheap
    # necessary condition before the full multiset sweep.
    for i in range(1, code.k + 1):
        if planner.max_packing(i) < t:
            return False
    if mode == "pir":
        return True
    return planner.servable_all(t)[0]


def redundancy_table(
    k_max: int,
    t_max: int,
    mode: str = "batch",
    n_slack: int = 3,
    r_cap: int | None = None,
    *,
    max_k: int = 5,
) -> list[SearchResult]:
    """min_length for every (k, t) in [1, k_max] x [1, t_max], each swept
    up to n = k + n_slack. Entries that found nothing stay in the table
    as not-found rows (rendered as unknown)."""
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    if t_max < 1:
        raise ValueError(f"t_max must be >= 1, got {t_max}")
    rows = []
    for k in range(1, k_max + 1):
        for t in range(1, t_max + 1):
            rows.append(
                min_length(
                    k,
                    t,
                    mode,
                    r_cap,
                    n_max=k + n_slack,
                    max_k=max_k,
                    max_slack=n_slack,
                )
            )
    return rows
