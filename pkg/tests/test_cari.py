"""Coclustering adjusted Rand index and the block-table factorization."""

import numpy as np
import pytest
from conftest import perm_relabel, rand_copartition_pair

from coclusteval import (
    CapacityError,
    CoPartition,
    Partition,
    block_contingency,
    block_contingency_naive,
    cari,
    cari_from_table,
    coclustering_rand_index,
    factor_tables,
)
from coclusteval.errors import DimensionMismatchError


class TestGoldenValues:
    def test_worked_example_value(self, worked_pair):
        u, v = worked_pair
        assert cari(u, v) == pytest.approx(0.2501, abs=1e-4)

    def test_worked_example_block_table(self, worked_pair):
        u, v = worked_pair
        t = block_contingency(u, v)
        assert t.shape == (4, 6)
        assert t.row_margins.tolist() == [8, 4, 12, 6]
        assert t.col_margins.tolist() == [12, 8, 4, 3, 2, 1]
        assert t.total == 30
        expected = np.kron(
            np.array([[2, 0], [2, 1]]),
            np.array([[3, 0, 1], [0, 2, 0]]),
        )
        assert np.array_equal(t.counts, expected)

    def test_permuted_blocks_give_exactly_one(self, permuted_pair):
        u, v = permuted_pair
        assert cari(u, v) == pytest.approx(1.0, abs=1e-12)


class TestFactorization:
    def test_kronecker_equals_naive(self, rng):
        for _ in range(200):
            u, v = rand_copartition_pair(rng)
            assert np.array_equal(block_contingency(u, v).counts, block_contingency_naive(u, v).counts)

    def test_margins_are_products_of_factor_margins(self, rng):
        for _ in range(200):
            u, v = rand_copartition_pair(rng)
            tz, tw = factor_tables(u, v)
            t = block_contingency(u, v)
            assert np.array_equal(t.row_margins, np.outer(tz.row_margins, tw.row_margins).reshape(-1))
            assert np.array_equal(t.col_margins, np.outer(tz.col_margins, tw.col_margins).reshape(-1))
            assert t.total == tz.total * tw.total

    def test_streamed_equals_materialized(self, rng):
        for _ in range(200):
            u, v = rand_copartition_pair(rng)
            assert cari(u, v) == cari_from_table(u, v)


class TestInvariances:
    def test_symmetry_in_arguments(self, rng):
        for _ in range(200):
            u, v = rand_copartition_pair(rng)
            assert cari(u, v) == pytest.approx(cari(v, u), abs=1e-12)

    def test_row_column_role_swap(self, rng):
        # transposing the grid permutes the block table without changing agreement
        for _ in range(100):
            u, v = rand_copartition_pair(rng)
            ut = CoPartition(u.cols, u.rows)
            vt = CoPartition(v.cols, v.rows)
            assert cari(u, v) == pytest.approx(cari(ut, vt), abs=1e-12)

    def test_identical_copartitions(self, rng):
        for _ in range(100):
            u, _ = rand_copartition_pair(rng)
            assert cari(u, u) == 1.0

    def test_label_permutations_keep_value_one(self, rng):
        for _ in range(100):
            u, _ = rand_copartition_pair(rng)
            v = CoPartition(perm_relabel(u.rows, rng), perm_relabel(u.cols, rng))
            assert cari(u, v) == pytest.approx(1.0, abs=1e-12)


class TestLimitsAndErrors:
    def test_grid_mismatch(self):
        u = CoPartition(Partition([1, 2]), Partition([1, 1]))
        v = CoPartition(Partition([1, 2, 1]), Partition([1, 1]))
        with pytest.raises(DimensionMismatchError):
            cari(u, v)

    def test_materialization_cap(self, worked_pair):
        u, v = worked_pair
        with pytest.raises(CapacityError):
            block_contingency(u, v, max_cells=3)
        # the streaming path has no such limit
        assert cari(u, v) == pytest.approx(0.2501, abs=1e-4)

    def test_unadjusted_block_rand_index(self, worked_pair):
        u, v = worked_pair
        assert coclustering_rand_index(u, u) == 1.0
        assert 0.0 <= coclustering_rand_index(u, v) <= 1.0

    def test_single_cell_grid(self):
        u = CoPartition(Partition([1]), Partition([1]))
        assert cari(u, u) == 1.0
