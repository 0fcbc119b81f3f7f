"""Closed-form length and cardinality bounds, evaluated in exact integer
arithmetic.

Length bounds state n >= rhs for any code with the given parameters;
the cardinality bound states q^k <= rhs. Each helper returns the rhs
(plus maximizing witnesses where a parameter is swept); evaluate_all
applies every bound to a computed CodeProfile and reports verdicts.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Mapping

from .errors import InsufficientDataError, NotApplicableError
from .profiler import CodeProfile

__all__ = [
    "BoundVerdict",
    "singleton",
    "gopalan_lrc",
    "wang_zhang",
    "plotkin_batch",
    "zs_base",
    "zs_best",
    "zs_systematic",
    "zs_refined",
    "redundancy_bound",
    "evaluate_all",
]


@dataclass(frozen=True)
class BoundVerdict:
    """One bound applied to one code.

    kind is "length" (n >= rhs) or "cardinality" (q^k <= rhs). witness
    records the parameters the bound was evaluated at, including any
    maximizing choices, so the number can be reproduced by hand.
    """

    name: str
    kind: str
    applicable: bool
    rhs: int | None
    attained: bool
    reason: str | None = None
    witness: dict[str, int] | None = None


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _require_positive(**params: int) -> None:
    for name, value in params.items():
        if value < 1:
            raise ValueError(f"{name} must be >= 1, got {value}")


def singleton(k: int, d: int) -> int:
    """n >= k + d - 1."""
    _require_positive(k=k, d=d)
    return k + d - 1


def gopalan_lrc(k: int, d: int, r: int) -> int:
    """n >= k + d + ceil(k/r) - 2 for all-symbol locality r."""
    _require_positive(k=k, d=d, r=r)
    return k + d + _ceil_div(k, r) - 2


def wang_zhang(k: int, d: int, r: int, delta: int) -> int:
    """n >= k + d + ceil((delta(k-1)+1) / (delta(r-1)+1)) - 2 for
    all-symbol locality r and availability delta."""
    _require_positive(k=k, d=d, r=r, delta=delta)
    return k + d + _ceil_div(delta * (k - 1) + 1, delta * (r - 1) + 1) - 2


def plotkin_batch(n: int, k: int, t: int, q: int = 2) -> BoundVerdict:
    """q^k <= floor(qt / (qt - (q-1)n)), applicable only when qt > (q-1)n;
    attained means equality."""
    _require_positive(n=n, k=k, q=q)
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    slack = q * t - (q - 1) * n
    witness = {"t": t, "q": q}
    if slack <= 0:
        return BoundVerdict(
            "plotkin_batch",
            "cardinality",
            applicable=False,
            rhs=None,
            attained=False,
            reason=f"requires q*t > (q-1)*n ({q * t} <= {(q - 1) * n})",
            witness=witness,
        )
    cap = (q * t) // slack
    return BoundVerdict(
        "plotkin_batch",
        "cardinality",
        applicable=True,
        rhs=cap,
        attained=(q**k == cap),
        witness=witness,
    )


def zs_base(k: int, d: int, r: int, t: int) -> int:
    """n >= k + d + (t-1)(ceil(k / (rt - t + 1)) - 1) - 1."""
    _require_positive(k=k, d=d, r=r, t=t)
    return k + d + (t - 1) * (_ceil_div(k, r * t - t + 1) - 1) - 1


def zs_best(k: int, d: int, r: int, t: int) -> tuple[int, int]:
    """Best sub-query bound: max over beta in [1, t] of the zs_base form
    with t replaced by beta. Returns (rhs, smallest maximizing beta)."""
    _require_positive(k=k, d=d, r=r, t=t)
    best = None
    best_beta = 1
    for beta in range(1, t + 1):
        val = k + d + (beta - 1) * (_ceil_div(k, r * beta - beta + 1) - 1) - 1
        if best is None or val > best:
            best = val
            best_beta = beta
    assert best is not None
    return best, best_beta


def zs_systematic(k: int, d: int, r: int, t: int) -> tuple[int, int]:
    """Systematic-code strengthening: max over beta in [2, t] of
    k + d + (beta-1)(ceil(k / (r*beta - beta - r + 2)) - 1) - 1.
    Returns (rhs, smallest maximizing beta); needs t >= 2."""
    _require_positive(k=k, d=d, r=r, t=t)
    if t < 2:
        raise NotApplicableError(f"requires t >= 2, got t = {t}")
    best = None
    best_beta = 2
    for beta in range(2, t + 1):
        denom = r * beta - beta - r + 2
        if denom < 1:
            continue
        val = k + d + (beta - 1) * (_ceil_div(k, denom) - 1) - 1
        if best is None or val > best:
            best = val
            best_beta = beta
    if best is None:
        raise NotApplicableError("no beta in [2, t] gives a positive divisor")
    return best, best_beta


def zs_refined(k: int, d: int, r: int, t: int) -> tuple[int, dict[str, int]]:
    """Refined bound: max over beta in [1, min(t, (k-3) // (2(r-1)))] and
    epsilon, lambda in [1, r*beta - beta] of min(A, B, C) where

        A = k + d + (beta-1)(ceil((k+epsilon) / (r*beta - beta + 1)) - 1) - 1
        B = k + d + (beta-1)(ceil((k+lambda)  / (r*beta - beta + 1)) - 1) - 1
        C = (r*beta - lambda + 1) k - C(k,2)(epsilon - 1)

    Needs r >= 2 and k >= 2(rt - t + 1) + 1. Returns (rhs, witness) with
    the first maximizing (beta, epsilon, lambda) in iteration order."""
    _require_positive(k=k, d=d, r=r, t=t)
    if r < 2:
        raise NotApplicableError(f"requires r >= 2, got r = {r}")
    floor_k = 2 * (r * t - t + 1) + 1
    if k < floor_k:
        raise NotApplicableError(
            f"requires k >= 2(rt-t+1)+1 = {floor_k}, got k = {k}"
        )
    beta_hi = min(t, (k - 3) // (2 * (r - 1)))
    if beta_hi < 1:
        raise NotApplicableError("no admissible beta")
    pairs = comb(k, 2)
    best = None
    witness: dict[str, int] = {}
    for beta in range(1, beta_hi + 1):
        width = r * beta - beta
        denom = width + 1
        for eps in range(1, width + 1):
            a_val = k + d + (beta - 1) * (_ceil_div(k + eps, denom) - 1) - 1
            for lam in range(1, width + 1):
                b_val = k + d + (beta - 1) * (_ceil_div(k + lam, denom) - 1) - 1
                c_val = (r * beta - lam + 1) * k - pairs * (eps - 1)
                val = min(a_val, b_val, c_val)
                if best is None or val > best:
                    best = val
                    witness = {"beta": beta, "epsilon": eps, "lambda": lam}
    assert best is not None
    return best, witness


def redundancy_bound(
    k: int, t: int, table: Mapping[tuple[int, int], int]
) -> int:
    """Recursive redundancy lower bound for systematic batch codes:

        rP(k, t) + h * ceil(log_{1/(1-h!/h^h)} C(k, h)) * rP(ceil(k/h), t-2)

    with h = floor(t/2); the second term vanishes for h <= 1. `table`
    maps (k', t') to known optimal-redundancy values rP; a missing entry
    raises InsufficientDataError naming it. The logarithm ceiling is the
    smallest integer c with b^c >= C(k,h) * a^c for 1 - h!/h^h = a/b,
    computed without floating point.
    """
    _require_positive(k=k, t=t)
    base = _table_lookup(table, k, t)
    h = t // 2
    if h <= 1:
        return base
    big_n = comb(k, h)
    b = h**h
    a = b - factorial(h)
    c = 0
    while b**c < big_n * a**c:
        c += 1
    sub = _table_lookup(table, _ceil_div(k, h), t - 2)
    return base + h * c * sub


def _table_lookup(
    table: Mapping[tuple[int, int], int], k: int, t: int
) -> int:
    try:
        return table[(k, t)]
    except KeyError:
        raise InsufficientDataError(
            f"redundancy table has no entry for (k={k}, t={t})", (k, t)
        )


def evaluate_all(prof: CodeProfile, q: int = 2) -> list[BoundVerdict]:
    """Every bound applied at the profile's parameters.

    Restricted-size bounds use r = r_cap, or r = n when the analysis cap
    was unbounded (a set never exceeds n columns); t is the profile's
    batch_t. The locality pair (r, delta) comes from the all-symbol
    profile, whose availability is capped at the locality itself so the
    pair is exactly what the LRC bounds quantify over.
    """
    n, k, d, t = prof.n, prof.k, prof.d, prof.batch_t
    r_eff = prof.r_cap if prof.r_cap is not None else prof.n
    out: list[BoundVerdict] = []

    def length(name: str, rhs: int, witness: dict[str, int] | None = None) -> None:
        out.append(
            BoundVerdict(
                name, "length", True, rhs, attained=(rhs == n), witness=witness
            )
        )

    def skip(name: str, reason: str) -> None:
        out.append(BoundVerdict(name, "length", False, None, False, reason))

    length("singleton", singleton(k, d))

    loc = prof.all_symbol.locality
    if loc is None or loc == 0:
        reason = "some coded symbol has no recovery set"
        skip("gopalan_lrc", reason)
        skip("wang_zhang", reason)
    else:
        length("gopalan_lrc", gopalan_lrc(k, d, loc), {"r": loc})
        delta = prof.all_symbol.availability
        if delta >= 1:
            length(
                "wang_zhang",
                wang_zhang(k, d, loc, delta),
                {"r": loc, "delta": delta},
            )
        else:
            skip("wang_zhang", "all-symbol availability is 0")

    out.append(plotkin_batch(n, k, t, q))

    if t < 1:
        for name in ("zs_base", "zs_best", "zs_systematic", "zs_refined"):
            skip(name, "batch parameter t is 0")
        return out

    length("zs_base", zs_base(k, d, r_eff, t), {"r": r_eff, "t": t})
    rhs, beta = zs_best(k, d, r_eff, t)
    length("zs_best", rhs, {"r": r_eff, "t": t, "beta": beta})

    if not prof.systematic:
        skip("zs_systematic", "code is not systematic")
    else:
        try:
            rhs, beta = zs_systematic(k, d, r_eff, t)
            length("zs_systematic", rhs, {"r": r_eff, "t": t, "beta": beta})
        except NotApplicableError as exc:
            skip("zs_systematic", str(exc))

    try:
        rhs, wit = zs_refined(k, d, r_eff, t)
        length("zs_refined", rhs, {"r": r_eff, "t": t, **wit})
    except NotApplicableError as exc:
        skip("zs_refined", str(exc))

    return out
