"""Serving plans: disjoint recovery-set systems for multiset queries.

A query asks for t information symbols, repeats allowed. A serving plan
assigns each query position its own recovery set, all pairwise disjoint,
so t reads can proceed in parallel on distinct servers. Searching only
minimal recovery sets loses nothing: any recovery set contains a minimal
one, and shrinking a set in a valid plan keeps the plan valid.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .errors import InvalidQueryError
from .gf2 import BitVector, LinearCode
from .recovery import RecoverySet, enumerate_recovery_sets, max_disjoint_packing

__all__ = [
    "Query",
    "ServingPlan",
    "QueryPlanner",
    "serve_query",
    "is_servable_all",
    "plan_is_valid",
]

# First enumeration cap per symbol; doubled whenever a failed plan search
# might have been starved by a truncated candidate list.
_INITIAL_CAP = 64


@dataclass(frozen=True)
class Query:
    """Multiset of requested information symbols, stored sorted (canonical)."""

    indices: tuple[int, ...]

    def __post_init__(self):
        try:
            canonical = tuple(sorted(int(i) for i in self.indices))
        except (TypeError, ValueError) as exc:
            raise InvalidQueryError(f"query indices must be integers: {exc}")
        if not canonical:
            raise InvalidQueryError("query must request at least one symbol")
        if canonical[0] < 1:
            raise InvalidQueryError(
                f"symbol indices are 1-based, got {canonical[0]}"
            )
        object.__setattr__(self, "indices", canonical)

    @classmethod
    def parse(cls, text: str) -> "Query":
        """Parse a comma-separated index list such as "1,1,2,2"."""
        parts = [p.strip() for p in text.split(",")]
        if any(not p for p in parts):
            raise InvalidQueryError(f"malformed query text {text!r}")
        try:
            indices = tuple(int(p) for p in parts)
        except ValueError:
            raise InvalidQueryError(f"malformed query text {text!r}")
        return cls(indices)

    @property
    def t(self) -> int:
        return len(self.indices)

    def counts(self) -> list[tuple[int, int]]:
        """Distinct symbols with multiplicities, ascending by symbol."""
        return sorted(Counter(self.indices).items())

    def __str__(self) -> str:
        return ",".join(str(i) for i in self.indices)


@dataclass(frozen=True)
class ServingPlan:
    """Pairwise-disjoint recovery sets, one per query position 1..t."""

    assignments: tuple[tuple[int, RecoverySet], ...]

    @property
    def t(self) -> int:
        return len(self.assignments)

    def recovery_sets(self) -> tuple[RecoverySet, ...]:
        return tuple(rs for _, rs in self.assignments)

    def columns_read(self) -> int:
        return sum(rs.size for _, rs in self.assignments)

    def __str__(self) -> str:
        return "; ".join(f"T{pos}={rs}" for pos, rs in self.assignments)


class QueryPlanner:
    """Plan searcher for one code and one recovery-set size cap.

    Candidate recovery sets and packing numbers are enumerated per
    symbol on demand and reused across queries, so sweeping all queries
    of a given size shares the expensive enumeration work.
    """

    def __init__(self, code: LinearCode, r: int | None = None):
        if r is not None and r < 1:
            raise ValueError(f"size cap r must be >= 1, got {r}")
        self._code = code
        self._r = r
        self._sets: dict[int, tuple[RecoverySet, ...]] = {}
        self._masks: dict[int, list[int]] = {}
        # Cap the enumeration stopped at; None once it is complete.
        self._cap: dict[int, int | None] = {}
        self._packing: dict[int, int] = {}

    @property
    def code(self) -> LinearCode:
        return self._code

    @property
    def r(self) -> int | None:
        return self._r

    def candidates(self, symbol: int) -> tuple[RecoverySet, ...]:
        """Complete list of minimal recovery sets for e_symbol within the cap."""
        self._ensure(symbol, None)
        return self._sets[symbol]

    def max_packing(self, symbol: int) -> int:
        """Exact maximum number of pairwise-disjoint recovery sets for e_symbol."""
        if symbol not in self._packing:
            self._ensure(symbol, None)
            self._packing[symbol] = max_disjoint_packing(self._masks[symbol])
        return self._packing[symbol]

    def serve(self, query: Query | Iterable[int]) -> ServingPlan | None:
        """A serving plan for `query`, or None when provably none exists."""
        q = query if isinstance(query, Query) else Query(tuple(query))
        if q.indices[-1] > self._code.k:
            raise InvalidQueryError(
                f"query index {q.indices[-1]} exceeds k = {self._code.k}"
            )
        groups = q.counts()
        while True:
            for sym, _ in groups:
                self._ensure(sym, _INITIAL_CAP)
            chosen = self._search(groups)
            if chosen is not None:
                return self._build_plan(q, chosen)
            starving = [s for s, _ in groups if self._cap[s] is not None]
            if not starving:
                return None
            for sym in starving:
                cap = self._cap[sym]
                assert cap is not None
                self._ensure(sym, cap * 2)

    def servable_all(self, t: int) -> tuple[bool, Query | None]:
        """Whether every size-t query is servable; on failure, the
        lexicographically first failing query is the witness."""
        if t < 1:
            raise ValueError(f"t must be >= 1, got {t}")
        for combo in combinations_with_replacement(
            range(1, self._code.k + 1), t
        ):
            q = Query(combo)
            if self.serve(q) is None:
                return False, q
        return True, None

    def _ensure(self, symbol: int, cap: int | None) -> None:
        if not 1 <= symbol <= self._code.k:
            raise InvalidQueryError(
                f"symbol {symbol} outside 1..{self._code.k}"
            )
        known = self._cap.get(symbol, 0)
        if known is None:
            return
        if cap is not None and known >= cap:
            return
        enum = enumerate_recovery_sets(
            self._code,
            BitVector.unit(self._code.k, symbol),
            max_size=self._r,
            max_count=cap,
        )
        self._sets[symbol] = enum.sets
        self._masks[symbol] = [rs.column_mask() for rs in enum.sets]
        self._cap[symbol] = cap if enum.truncated else None
        self._packing.pop(symbol, None)

    def _search(self, groups: Sequence[tuple[int, int]]) -> dict[int, list[int]] | None:
        """Backtracking assignment of disjoint candidate sets to groups.

        Groups with the fewest candidates are placed first; within a
        group, copies take candidates at strictly increasing positions,
        so the first plan found is the lexicographic depth-first one.
        """
        infos = []
        for sym, cnt in sorted(
            groups, key=lambda g: (len(self._masks[g[0]]), g[0])
        ):
            masks = self._masks[sym]
            if len(masks) < cnt:
                return None
            infos.append((sym, cnt, masks, min(m.bit_count() for m in masks)))

        suffix_need = [0] * (len(infos) + 1)
        for i in range(len(infos) - 1, -1, -1):
            _, cnt, _, smallest = infos[i]
            suffix_need[i] = suffix_need[i + 1] + cnt * smallest

        n = self._code.n
        chosen: dict[int, list[int]] = {}

        def place(gi: int, used: int) -> bool:
            if gi == len(infos):
                return True
            sym, cnt, masks, smallest = infos[gi]
            picks: list[int] = []

            def pick(start: int, left: int, used_now: int) -> bool:
                if left == 0:
                    if place(gi + 1, used_now):
                        chosen[sym] = list(picks)
                        return True
                    return False
                free = n - used_now.bit_count()
                if free < left * smallest + suffix_need[gi + 1]:
                    return False
                open_slots = sum(
                    1 for i in range(start, len(masks)) if not masks[i] & used_now
                )
                if open_slots < left:
                    return False
                for i in range(start, len(masks) - left + 1):
                    if masks[i] & used_now:
                        continue
                    picks.append(i)
                    if pick(i + 1, left - 1, used_now | masks[i]):
                        return True
                    picks.pop()
                return False

            return pick(0, cnt, used)

        if place(0, 0):
            return chosen
        return None

    def _build_plan(self, q: Query, chosen: dict[int, list[int]]) -> ServingPlan:
        positions: dict[int, list[int]] = {}
        for pos, sym in enumerate(q.indices, 1):
            positions.setdefault(sym, []).append(pos)
        assignments = []
        for sym, pos_list in positions.items():
            sets = self._sets[sym]
            for pos, ci in zip(pos_list, chosen[sym]):
                assignments.append((pos, sets[ci]))
        assignments.sort(key=lambda a: a[0])
        return ServingPlan(tuple(assignments))


def serve_query(
    code: LinearCode, query: Query | Iterable[int], r: int | None = None
) -> ServingPlan | None:
    """One-shot serving plan search; see QueryPlanner.serve."""
    return QueryPlanner(code, r).serve(query)


def is_servable_all(
    code: LinearCode, t: int, r: int | None = None
) -> tuple[bool, Query | None]:
    """One-shot servability sweep; see QueryPlanner.servable_all."""
    return QueryPlanner(code, r).servable_all(t)


def plan_is_valid(
    code: LinearCode,
    query: Query | Iterable[int],
    plan: ServingPlan,
    r: int | None = None,
) -> bool:
    """Independent revalidation of a plan against code, query, and cap.

    Recomputes every recovery-set sum straight from the generator
    columns; shares no logic with the planner search.
    """
    q = query if isinstance(query, Query) else Query(tuple(query))
    if len(plan.assignments) != q.t:
        return False
    if tuple(pos for pos, _ in plan.assignments) != tuple(range(1, q.t + 1)):
        return False
    cols = code.column_words
    used = 0
    for pos, rs in plan.assignments:
        symbol = q.indices[pos - 1]
        if r is not None and rs.size > r:
            return False
        if len(set(rs.columns)) != rs.size:
            return False
        mask = 0
        acc = 0
        for j in rs.columns:
            if not 1 <= j <= code.n:
                return False
            mask |= 1 << (j - 1)
            acc ^= cols[j - 1]
        if acc != 1 << (symbol - 1):
            return False
        if mask & used:
            return False
        used |= mask
    return True
