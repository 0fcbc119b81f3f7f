"""Shared fixtures: the named-code corpus and a random code generator."""

from __future__ import annotations

import random

import pytest

from batchcodes import (
    BitMatrix,
    LinearCode,
    blockwise_subcube_allones,
    identity,
    paired_parity,
    simplex,
    subcube,
    triplicated_parity,
)


def build_corpus() -> list[tuple[str, LinearCode]]:
    return [
        ("identity(2)", identity(2)),
        ("identity(3)", identity(3)),
        ("identity(4)", identity(4)),
        ("subcube(2,1)", subcube(2, 1)),
        ("subcube(3,1)", subcube(3, 1)),
        ("subcube(2,2)", subcube(2, 2)),
        ("simplex(2)", simplex(2)),
        ("simplex(3)", simplex(3)),
        ("simplex(4)", simplex(4)),
        ("triplicated_parity(3)", triplicated_parity(3)),
        ("triplicated_parity(4)", triplicated_parity(4)),
        ("triplicated_parity(5)", triplicated_parity(5)),
        ("blockwise_subcube_allones(1)", blockwise_subcube_allones(1)),
        ("blockwise_subcube_allones(2)", blockwise_subcube_allones(2)),
        ("blockwise_subcube_allones(3)", blockwise_subcube_allones(3)),
        ("paired_parity(2)", paired_parity(2)),
        ("paired_parity(3)", paired_parity(3)),
        ("paired_parity(4)", paired_parity(4)),
        ("paired_parity(5)", paired_parity(5)),
        ("paired_parity(6)", paired_parity(6)),
    ]


@pytest.fixture(scope="session")
def corpus() -> list[tuple[str, LinearCode]]:
    return build_corpus()


def random_systematic(rng: random.Random, k_max: int = 5, n_max: int = 10) -> LinearCode:
    """Random [I | A] code; A columns may be anything, including zero."""
    k = rng.randint(2, k_max)
    n = rng.randint(k, n_max)
    words = []
    for i in range(k):
        word = 1 << i
        for j in range(k, n):
            word |= rng.getrandbits(1) << j
        words.append(word)
    return LinearCode(BitMatrix(n, tuple(words)))
