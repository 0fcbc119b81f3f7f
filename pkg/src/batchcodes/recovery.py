"""Enumeration of minimal recovery sets and exact disjoint set packing.

A recovery set for a target vector v is a set of column indices whose
generator columns XOR to v; it is minimal when no proper subset works.
Over GF(2) a recovery set for a nonzero target is minimal exactly when
its columns are linearly independent: if the chosen columns were
dependent, some nonempty subset would sum to zero and its complement
would still sum to v. Minimal sets therefore never exceed k columns,
and a depth-first search can discard any branch whose next column lies
in the span of the columns already chosen.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionError, InvalidTargetError
from .gf2 import BitVector, LinearCode

__all__ = [
    "RecoverySet",
    "RecoveryEnumeration",
    "enumerate_recovery_sets",
    "max_disjoint_packing",
]


@dataclass(frozen=True)
class RecoverySet:
    """Minimal set of 1-indexed columns whose sum is `target`."""

    target: BitVector
    columns: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.columns)

    def column_mask(self) -> int:
        """Bitmask over [n] with bit j-1 set for each member column j."""
        mask = 0
        for j in self.columns:
            mask |= 1 << (j - 1)
        return mask

    def __str__(self) -> str:
        return "{" + ",".join(str(j) for j in self.columns) + "}"


@dataclass(frozen=True)
class RecoveryEnumeration:
    """Enumeration result; `truncated` means more sets exist beyond the cap."""

    sets: tuple[RecoverySet, ...]
    truncated: bool

    def __iter__(self):
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)


def enumerate_recovery_sets(
    code: LinearCode,
    target: BitVector,
    excluded: Iterable[int] = (),
    max_size: int | None = None,
    max_count: int | None = None,
) -> RecoveryEnumeration:
    """All minimal recovery sets for `target`, in lexicographic order of
    their sorted column tuples.

    `excluded` columns are never used. `max_size` caps the set size,
    `max_count` caps how many sets are returned; when more than
    `max_count` exist the result is marked truncated. The target must
    be a nonzero length-k vector.
    """
    if target.length != code.k:
        raise DimensionError(
            f"target length {target.length} != k = {code.k}"
        )
    if target.is_zero():
        raise InvalidTargetError("recovery target must be nonzero")
    banned = set(excluded)
    for j in banned:
        if not 1 <= j <= code.n:
            raise DimensionError(f"excluded column {j} outside 1..{code.n}")
    if max_size is not None and max_size < 1:
        raise ValueError(f"max_size must be >= 1, got {max_size}")
    if max_count is not None and max_count < 1:
        raise ValueError(f"max_count must be >= 1, got {max_count}")

    columns = [
        (j, w)
        for j, w in enumerate(code.column_words, 1)
        if j not in banned and w != 0
    ]
    size_cap = code.k if max_size is None else min(max_size, code.k)
    found, truncated = _minimal_sets(columns, target.word, size_cap, max_count)
    sets = tuple(RecoverySet(target, cols) for cols in found)
    return RecoveryEnumeration(sets, truncated)


def _minimal_sets(
    columns: list[tuple[int, int]],
    target: int,
    max_size: int,
    max_count: int | None,
) -> tuple[list[tuple[int, ...]], bool]:
    """DFS over columns in index order. Minimal sets surface in preorder,
    which is lexicographic order of the sorted index tuples."""
    m = len(columns)
    # suffix_span[i]: low-bit pivot basis of the span of columns[i:].
    suffix_span: list[dict[int, int]] = [dict() for _ in range(m + 1)]
    for i in range(m - 1, -1, -1):
        span = dict(suffix_span[i + 1])
        _span_insert(span, columns[i][1])
        suffix_span[i] = span

    hard_cap = None if max_count is None else max_count + 1
    out: list[tuple[int, ...]] = []
    path: list[int] = []
    path_span: dict[int, int] = {}

    def dfs(start: int, residual: int) -> bool:
        # Returns True when the hard cap is reached and search must stop.
        if len(path) == max_size:
            return False
        for idx in range(start, m):
            if not _span_member(suffix_span[idx], residual):
                # Suffix spans only shrink with idx: no completion remains.
                return False
            j, word = columns[idx]
            reduced = _span_reduce(path_span, word)
            if reduced == 0:
                continue  # dependent on the current path: never minimal
            nxt = residual ^ word
            if nxt == 0:
                out.append(tuple(path) + (j,))
                if hard_cap is not None and len(out) == hard_cap:
                    return True
                continue  # supersets of a recovery set are dependent
            path.append(j)
            low = reduced & -reduced
            path_span[low] = reduced
            stop = dfs(idx + 1, nxt)
            del path_span[low]
            path.pop()
            if stop:
                return True
        return False

    dfs(0, target)
    truncated = hard_cap is not None and len(out) == hard_cap
    if truncated:
        out.pop()
    return out, truncated


def _span_insert(span: dict[int, int], word: int) -> None:
    cur = word
    while cur:
        low = cur & -cur
        if low in span:
            cur ^= span[low]
        else:
            span[low] = cur
            return


def _span_reduce(span: dict[int, int], word: int) -> int:
    cur = word
    while cur:
        low = cur & -cur
        if low not in span:
            return cur
        cur ^= span[low]
    return 0


def _span_member(span: dict[int, int], word: int) -> bool:
    return _span_reduce(span, word) == 0


def max_disjoint_packing(
    masks: Sequence[int], stop_at: int | None = None
) -> int:
    """Exact maximum number of pairwise-disjoint sets among `masks`
    (column bitmasks), by branch and bound seeded with a greedy packing.

    With `stop_at`, the search may stop early once that many disjoint
    sets are known to exist; the return value is then only guaranteed
    to be >= stop_at.
    """
    items = sorted((m for m in masks if m), key=lambda m: (m.bit_count(), m))
    if not items:
        return 0
    universe = 0
    for m in items:
        universe |= m
    sizes = [m.bit_count() for m in items]

    best = 0
    used = 0
    for m in items:
        if not m & used:
            used |= m
            best += 1
    if stop_at is not None and best >= stop_at:
        return best

    count = len(items)

    def dfs(start: int, used: int, depth: int) -> bool:
        nonlocal best
        if depth > best:
            best = depth
            if stop_at is not None and best >= stop_at:
                return True
        avail = [i for i in range(start, count) if not items[i] & used]
        if not avail:
            return False
        free = (universe & ~used).bit_count()
        smallest = min(sizes[i] for i in avail)
        if depth + min(len(avail), free // smallest) <= best:
            return False
        for pos, i in enumerate(avail):
            if depth + (len(avail) - pos) <= best:
                break
            if dfs(i + 1, used | items[i], depth + 1):
                return True
        return False

    dfs(0, 0, 0)
    return best
