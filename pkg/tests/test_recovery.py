"""Minimal recovery-set enumeration and exact disjoint packing."""

import random

import pytest

from batchcodes import (
    BitVector,
    DimensionError,
    InvalidTargetError,
    LinearCode,
    RecoverySet,
    enumerate_recovery_sets,
    max_disjoint_packing,
    simplex,
    subcube,
)
from conftest import random_systematic
from oracles import (
    brute_max_packing,
    brute_minimal_recovery_sets,
    subset_sum_table,
)


def as_tuples(enum):
    return [rs.columns for rs in enum.sets]


class TestRecoverySet:
    def test_basics(self):
        rs = RecoverySet(BitVector.unit(2, 1), (2, 3))
        assert rs.size == 2
        assert rs.column_mask() == 0b110
        assert str(rs) == "{2,3}"


class TestEnumeration:
    def test_known_small_code(self):
        code = subcube(2, 1)
        enum = enumerate_recovery_sets(code, BitVector.unit(2, 1))
        assert [str(rs) for rs in enum] == ["{1}", "{2,3}"]
        assert not enum.truncated
        assert len(enum) == 2

    def test_matches_oracle_on_corpus(self, corpus):
        rng = random.Random(21)
        for name, code in corpus:
            if code.n > 14:
                continue
            sums = subset_sum_table(code)
            targets = [1 << (i - 1) for i in range(1, code.k + 1)]
            targets.append(rng.randrange(1, 1 << code.k))
            for word in targets:
                for excluded, max_size in (
                    (frozenset(), None),
                    (frozenset(), 2),
                    (frozenset((1,)), None),
                ):
                    got = as_tuples(
                        enumerate_recovery_sets(
                            code,
                            BitVector(code.k, word),
                            excluded=excluded,
                            max_size=max_size,
                        )
                    )
                    want = brute_minimal_recovery_sets(
                        code, word, excluded, max_size, sums
                    )
                    assert got == want, (name, word, excluded, max_size)

    def test_matches_oracle_on_random_codes(self):
        rng = random.Random(22)
        for _ in range(30):
            code = random_systematic(rng, k_max=4, n_max=9)
            sums = subset_sum_table(code)
            word = rng.randrange(1, 1 << code.k)
            got = as_tuples(enumerate_recovery_sets(code, BitVector(code.k, word)))
            assert got == brute_minimal_recovery_sets(code, word, sums=sums)

    def test_lexicographic_order_and_minimality(self, corpus):
        for name, code in corpus:
            for i in range(1, code.k + 1):
                enum = enumerate_recovery_sets(code, BitVector.unit(code.k, i))
                tuples = as_tuples(enum)
                assert tuples == sorted(tuples), name
                masks = [rs.column_mask() for rs in enum]
                for a in masks:
                    for b in masks:
                        assert not (a != b and a & b == a), name

    def test_truncation_is_exact(self):
        code = simplex(3)
        full = as_tuples(enumerate_recovery_sets(code, BitVector.unit(3, 1)))
        total = len(full)
        assert total > 2
        for cap in range(1, total + 1):
            enum = enumerate_recovery_sets(
                code, BitVector.unit(3, 1), max_count=cap
            )
            assert as_tuples(enum) == full[:cap]
            assert enum.truncated == (cap < total)

    def test_zero_columns_never_used(self):
        code = LinearCode.from_rows([[1, 0, 0], [0, 1, 0]])
        enum = enumerate_recovery_sets(code, BitVector.unit(2, 2))
        assert as_tuples(enum) == [(2,)]

    def test_set_sizes_never_exceed_k(self, corpus):
        # Minimal sets have independent columns, so at most k of them.
        for name, code in corpus:
            enum = enumerate_recovery_sets(code, BitVector.unit(code.k, 1))
            assert all(rs.size <= code.k for rs in enum), name

    def test_validation(self):
        code = subcube(2, 1)
        with pytest.raises(InvalidTargetError):
            enumerate_recovery_sets(code, BitVector.zero(2))
        with pytest.raises(DimensionError):
            enumerate_recovery_sets(code, BitVector.unit(3, 1))
        with pytest.raises(DimensionError):
            enumerate_recovery_sets(code, BitVector.unit(2, 1), excluded=(4,))
        with pytest.raises(ValueError):
            enumerate_recovery_sets(code, BitVector.unit(2, 1), max_size=0)
        with pytest.raises(ValueError):
            enumerate_recovery_sets(code, BitVector.unit(2, 1), max_count=0)


class TestMaxDisjointPacking:
    def test_known_values(self):
        assert max_disjoint_packing([]) == 0
        assert max_disjoint_packing([0b1, 0b10, 0b100]) == 3
        assert max_disjoint_packing([0b11, 0b110, 0b101]) == 1
        # Greedy by size alone would take {1} then be blocked at 2;
        # the exact answer pairs {2,3} with {1}.
        assert max_disjoint_packing([0b001, 0b110, 0b011]) == 2
        assert max_disjoint_packing([0, 0b1]) == 1

    def test_matches_oracle_on_random_families(self):
        rng = random.Random(23)
        for _ in range(60):
            n = rng.randint(1, 9)
            count = rng.randint(1, 10)
            masks = [rng.randrange(1, 1 << n) for _ in range(count)]
            assert max_disjoint_packing(masks) == brute_max_packing(masks)

    def test_matches_oracle_on_recovery_sets(self, corpus):
        # The unpruned oracle recursion needs small set families.
        for name, code in corpus:
            if code.n > 10:
                continue
            for i in range(1, code.k + 1):
                enum = enumerate_recovery_sets(code, BitVector.unit(code.k, i))
                masks = [rs.column_mask() for rs in enum]
                assert max_disjoint_packing(masks) == brute_max_packing(masks), name

    def test_stop_at(self):
        masks = [0b0001, 0b0010, 0b0100, 0b1000]
        full = max_disjoint_packing(masks)
        assert full == 4
        early = max_disjoint_packing(masks, stop_at=2)
        assert 2 <= early <= full
        assert max_disjoint_packing(masks, stop_at=10) == full
