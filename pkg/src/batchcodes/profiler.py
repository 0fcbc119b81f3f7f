"""Exact code parameters: batch t, PIR t, locality, and availability.

batch_t(r) is the largest t for which every multiset query of t symbols
has a serving plan with recovery sets of size at most r; pir_t(r) only
requires the t-fold repeated queries to be servable, which reduces to a
disjoint-packing number per symbol. A uniform query (i, i, ..., i) is
servable exactly when e_i admits t pairwise-disjoint recovery sets, so
batch_t never exceeds pir_t and the batch sweep can stop there.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotSystematicError
from .gf2 import BitVector, LinearCode
from .planner import QueryPlanner
from .recovery import enumerate_recovery_sets, max_disjoint_packing

__all__ = [
    "SymbolRecovery",
    "LrcProfile",
    "CodeProfile",
    "pir_t",
    "batch_t",
    "lrc_profile",
    "info_lrc_profile",
    "corollary_check",
    "profile",
]


@dataclass(frozen=True)
class SymbolRecovery:
    """Per-symbol repair summary.

    min_size is None when the symbol has no recovery set at all; packing
    is None only for a trivially recoverable symbol (zero column), whose
    supply of disjoint recovery sets is unbounded.
    """

    index: int
    min_size: int | None
    packing: int | None


@dataclass(frozen=True)
class LrcProfile:
    """Locality and availability at a given size cap.

    locality is the max over symbols of the smallest recovery-set size,
    None when some symbol is unrecoverable. availability is the min over
    symbols of the number of pairwise-disjoint recovery sets of size at
    most `cap` (0 when some symbol has none within the cap).
    """

    cap: int | None
    locality: int | None
    availability: int
    symbols: tuple[SymbolRecovery, ...]


@dataclass(frozen=True)
class CodeProfile:
    """Full parameter sheet for one code at one analysis cap r_cap."""

    n: int
    k: int
    d: int
    rate: Fraction
    systematic: bool
    r_cap: int | None
    batch_t: int
    pir_t: int
    all_symbol: LrcProfile
    info_symbol: LrcProfile | None


def pir_t(code: LinearCode, r: int | None = None) -> int:
    """Largest t with every uniform query servable: the smallest, over
    information symbols, of the disjoint recovery-set packing number."""
    return _pir(QueryPlanner(code, r))


def batch_t(code: LinearCode, r: int | None = None) -> int:
    """Largest t with every multiset query of t symbols servable."""
    return _batch(QueryPlanner(code, r))


def _pir(planner: QueryPlanner) -> int:
    return min(
        planner.max_packing(i) for i in range(1, planner.code.k + 1)
    )


def _batch(planner: QueryPlanner) -> int:
    ceiling = _pir(planner)
    t = 0
    while t < ceiling:
        ok, _ = planner.servable_all(t + 1)
        if not ok:
            break
        t += 1
    return t


def _symbol_entry(
    code: LinearCode,
    index: int,
    target_word: int,
    excluded: frozenset[int],
    cap: int | None,
) -> SymbolRecovery:
    if target_word == 0:
        return SymbolRecovery(index, 0, None)
    enum = enumerate_recovery_sets(
        code, BitVector(code.k, target_word), excluded=excluded
    )
    if not enum.sets:
        return SymbolRecovery(index, None, 0)
    min_size = min(rs.size for rs in enum.sets)
    masks = [
        rs.column_mask() for rs in enum.sets if cap is None or rs.size <= cap
    ]
    return SymbolRecovery(index, min_size, max_disjoint_packing(masks))


def _aggregate(cap: int | None, entries: list[SymbolRecovery]) -> LrcProfile:
    locality: int | None = 0
    for e in entries:
        if e.min_size is None:
            locality = None
            break
        if locality is not None and e.min_size > locality:
            locality = e.min_size
    packings = [e.packing for e in entries if e.packing is not None]
    availability = min(packings) if packings else 0
    return LrcProfile(cap, locality, availability, tuple(entries))


def lrc_profile(code: LinearCode, r: int | None = None) -> LrcProfile:
    """All-symbol repair profile: each coded symbol j must be rebuilt
    from columns other than j.

    With r=None the availability cap defaults to the code's own
    locality, pairing the two parameters the way a locality/availability
    claim is normally stated; pass an explicit r to cap differently.
    """
    targets = [
        (j, w, frozenset((j,))) for j, w in enumerate(code.column_words, 1)
    ]
    if r is None:
        # First pass unbounded to learn the locality, then cap there.
        sizes = []
        for j, w, excl in targets:
            if w == 0:
                continue
            enum = enumerate_recovery_sets(code, BitVector(code.k, w), excluded=excl)
            sizes.append(min((rs.size for rs in enum.sets), default=None))
        if any(s is None for s in sizes):
            cap = None
        else:
            cap = max(sizes) if sizes else 0
    else:
        if r < 1:
            raise ValueError(f"size cap r must be >= 1, got {r}")
        cap = r
    entries = [
        _symbol_entry(code, j, w, excl, cap) for j, w, excl in targets
    ]
    return _aggregate(cap, entries)


def info_lrc_profile(
    code: LinearCode, r: int | None = None, include_self: bool = True
) -> LrcProfile:
    """Information-symbol repair profile for a systematic code.

    Targets are the unit vectors e_i over all n columns, so the identity
    column itself counts as a size-1 recovery set. include_self=False
    removes column sigma(i) from play, the strict repair reading. r=None
    leaves set sizes unbounded.
    """
    if r is not None and r < 1:
        raise ValueError(f"size cap r must be >= 1, got {r}")
    colmap = code.identity_column_map()
    if colmap is None:
        raise NotSystematicError(
            "info-symbol profile requires a systematic code"
        )
    entries = []
    for i in range(1, code.k + 1):
        excluded = frozenset() if include_self else frozenset((colmap[i],))
        entries.append(
            _symbol_entry(code, i, 1 << (i - 1), excluded, r)
        )
    return _aggregate(r, entries)


def corollary_check(
    code: LinearCode, t: int, r: int | None = None
) -> bool:
    """Equivalence self-test relating PIR servability to info-symbol repair.

    For a systematic code, [pir_t(code, r) >= t] must coincide with
    [every e_i admits t-1 pairwise-disjoint recovery sets of size at
    most r avoiding column sigma(i)]. Both sides are computed
    independently; returns whether they agree (always True unless
    something is broken).
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if not code.is_systematic:
        raise NotSystematicError("corollary_check requires a systematic code")
    lhs = pir_t(code, r) >= t
    info = info_lrc_profile(code, r=r, include_self=False)
    rhs = info.availability >= t - 1
    return lhs == rhs


def profile(code: LinearCode, r_cap: int | None = None) -> CodeProfile:
    """Everything at once: distance, batch/PIR parameters at r_cap,
    all-symbol profile at the code's locality, info-symbol profile at
    r_cap when systematic."""
    if r_cap is not None and r_cap < 1:
        raise ValueError(f"size cap r_cap must be >= 1, got {r_cap}")
    planner = QueryPlanner(code, r_cap)
    pir = _pir(planner)
    batch = _batch(planner)
    info = (
        info_lrc_profile(code, r_cap) if code.is_systematic else None
    )
    return CodeProfile(
        n=code.n,
        k=code.k,
        d=code.min_distance(),
        rate=code.rate,
        systematic=code.is_systematic,
        r_cap=r_cap,
        batch_t=batch,
        pir_t=pir,
        all_symbol=lrc_profile(code),
        info_symbol=info,
    )
