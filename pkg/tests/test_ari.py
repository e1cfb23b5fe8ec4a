"""Rand index and adjusted Rand index."""

from math import comb

import pytest
from conftest import naive_ari_from_pairs, perm_relabel, rand_partition

from coclusteval import (
    ContingencyTable,
    Partition,
    adjusted_rand_index,
    adjusted_rand_index_pairs,
    ari,
    contingency,
    pair_counts,
    rand_index,
    ri,
)


class TestGoldenValues:
    def test_disagreeing_row_partitions(self):
        # contingency [[2,0],[2,1]]: pairs (a,b,c,d)=(2,2,4,2)
        t = ContingencyTable([[2, 0], [2, 1]])
        assert rand_index(t) == pytest.approx(0.4, abs=1e-12)
        assert adjusted_rand_index(t) == pytest.approx(-0.15384615384615385, abs=1e-12)

    def test_agreeing_column_partitions(self):
        t = ContingencyTable([[3, 0, 1], [0, 2, 0]])
        assert rand_index(t) == pytest.approx(0.8, abs=1e-12)
        assert adjusted_rand_index(t) == pytest.approx(0.5871559633027523, abs=1e-12)

    def test_partition_level_wrappers(self):
        z = Partition([1, 2, 2, 2, 1])
        zp = Partition([1, 1, 2, 1, 1])
        assert ari(z, zp) == pytest.approx(-0.15384615384615385, abs=1e-12)
        assert ri(z, zp) == pytest.approx(0.4, abs=1e-12)


class TestExactCases:
    def test_identical_partitions_give_exactly_one(self, rng):
        for _ in range(50):
            p = rand_partition(rng, int(rng.integers(2, 20)), 4)
            assert ari(p, p) == 1.0

    def test_label_permutation_gives_exactly_one(self, rng):
        for _ in range(50):
            p = rand_partition(rng, int(rng.integers(2, 20)), 4)
            assert ari(p, perm_relabel(p, rng)) == 1.0

    def test_single_cluster_against_itself(self):
        assert ari(Partition([1, 1, 1]), Partition([1, 1, 1])) == 1.0

    def test_single_element(self):
        assert ari(Partition([1]), Partition([1])) == 1.0
        assert ri(Partition([1]), Partition([1])) == 1.0

    def test_all_singletons_both_sides(self):
        p = Partition([1, 2, 3])
        assert ari(p, p) == 1.0


class TestFormEquivalence:
    def test_table_form_equals_pair_form(self, rng):
        for _ in range(300):
            n = int(rng.integers(2, 30))
            p = rand_partition(rng, n, 5)
            q = rand_partition(rng, n, 5)
            t = contingency(p, q)
            assert adjusted_rand_index(t) == pytest.approx(
                adjusted_rand_index_pairs(pair_counts(t)), abs=1e-12
            )

    def test_pair_counts_cover_all_pairs(self, rng):
        for _ in range(300):
            n = int(rng.integers(2, 40))
            p = rand_partition(rng, n, 5)
            q = rand_partition(rng, n, 5)
            pc = pair_counts(contingency(p, q))
            assert pc.total_pairs == comb(n, 2)

    def test_pair_form_matches_plain_float_oracle(self, rng):
        for _ in range(200):
            n = int(rng.integers(2, 25))
            p = rand_partition(rng, n, 4)
            q = rand_partition(rng, n, 4)
            pc = pair_counts(contingency(p, q))
            assert adjusted_rand_index_pairs(pc) == pytest.approx(
                naive_ari_from_pairs(pc.a, pc.b, pc.c, pc.d), abs=1e-12
            )


class TestSymmetry:
    def test_transposed_table(self, rng):
        for _ in range(100):
            n = int(rng.integers(2, 25))
            p = rand_partition(rng, n, 4)
            q = rand_partition(rng, n, 4)
            t = contingency(p, q)
            assert adjusted_rand_index(t) == pytest.approx(adjusted_rand_index(t.transpose()), abs=1e-15)
            assert rand_index(t) == pytest.approx(rand_index(t.transpose()), abs=1e-15)
