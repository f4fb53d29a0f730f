"""Set partitions, counting recurrences, and the expansion formulas."""

import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alphaperm.errors import CapacityError, DomainError, MixedModeError
from alphaperm.kernels import hafnian, per_alpha_dp, permanent
from alphaperm.matrices import (
    Matrix,
    doubled,
    indices_from_mask,
    random_matrix,
    random_symmetric_matrix,
    submatrix,
)
from alphaperm.partitions import (
    SetPartition,
    bell_number,
    enumerate_partitions,
    enumerate_shape_partitions,
    half_formula_rhs,
    per_beta_k,
    product_formula_rhs,
    shape_partition_count,
    stirling2,
    sum_formula_rhs,
)
from alphaperm.scalars import GaussianRational, gen_binomial

F = Fraction
G = GaussianRational


class TestSetPartition:
    def test_from_rgs(self):
        p = SetPartition((0, 1, 0, 2))
        assert p.k == 3
        assert p.blocks == (0b0101, 0b0010, 0b1000)
        assert p.shape() == (2, 1, 1)

    def test_bad_rgs(self):
        with pytest.raises(DomainError):
            SetPartition((1, 0))        # must start at 0
        with pytest.raises(DomainError):
            SetPartition((0, 2))        # cannot skip a label


class TestEnumeration:
    def test_counts_match_bell(self):
        for n in range(9):
            assert sum(1 for _ in enumerate_partitions(n)) == bell_number(n)

    def test_counts_match_stirling(self):
        for n in range(1, 8):
            for k in range(1, n + 1):
                got = sum(1 for _ in enumerate_partitions(n, k))
                assert got == stirling2(n, k)

    def test_all_distinct_and_valid(self):
        seen = set()
        for p in enumerate_partitions(5):
            assert sum(bin(b).count("1") for b in p.blocks) == 5
            union = 0
            for b in p.blocks:
                assert union & b == 0
                union |= b
            assert union == 0b11111
            seen.add(p.blocks)
        assert len(seen) == bell_number(5)

    def test_shape_enumeration(self):
        for shape, count in [((4, 1), 5), ((3, 2), 10), ((3, 1, 1), 10),
                             ((2, 2, 1), 15)]:
            parts = list(enumerate_shape_partitions(5, shape))
            assert len(parts) == count
            assert len(set(p.blocks for p in parts)) == count
            for p in parts:
                assert p.shape() == tuple(sorted(shape, reverse=True))
            assert count == shape_partition_count(5, shape)

    def test_shape_counts_sum_to_stirling(self):
        # sum of shape counts over all shapes with k parts = S(n, k)
        def shapes(n, k, largest):
            if k == 0:
                if n == 0:
                    yield ()
                return
            for first in range(min(n - k + 1, largest), 0, -1):
                for rest in shapes(n - first, k - 1, first):
                    yield (first,) + rest

        for n in range(1, 8):
            for k in range(1, n + 1):
                total = sum(
                    shape_partition_count(n, s) for s in shapes(n, k, n))
                assert total == stirling2(n, k)


class TestCountingFunctions:
    def test_bell_pinned(self):
        assert [bell_number(k) for k in range(9)] == [
            1, 1, 2, 5, 15, 52, 203, 877, 4140]

    def test_stirling_pinned(self):
        assert stirling2(4, 2) == 7
        assert stirling2(5, 3) == 25
        assert stirling2(0, 0) == 1
        assert stirling2(3, 0) == 0
        assert stirling2(3, 4) == 0

    def test_stirling_recurrence(self):
        for n in range(1, 9):
            for k in range(1, n + 1):
                assert stirling2(n, k) == (
                    k * stirling2(n - 1, k) + stirling2(n - 1, k - 1))

    def test_shape_count_errors(self):
        with pytest.raises(DomainError):
            shape_partition_count(4, (3, 2))
        with pytest.raises(DomainError):
            shape_partition_count(3, (3, 0))


class TestPerBetaK:
    def test_identity_blocks(self):
        # on I_3 with beta=1 each block contributes 1, so per(I_3, k) counts
        # ordered partitions: k! * S(3, k)
        I3 = Matrix.identity(3, "rational")
        for k in range(1, 4):
            assert per_beta_k(I3, F(1), k) == math.factorial(k) * stirling2(3, k)

    def test_brute_force(self):
        A = random_matrix(4, "rational", scale=3, seed=21)
        beta = F(-3, 2)
        for k in range(1, 5):
            total = F(0)
            for p in enumerate_partitions(4, k):
                prod = F(1)
                for b in p.blocks:
                    prod *= per_alpha_dp(submatrix(A, b), beta)
                total += prod
            assert per_beta_k(A, beta, k) == math.factorial(k) * total

    def test_bad_k(self):
        A = Matrix.identity(2, "rational")
        with pytest.raises(DomainError):
            per_beta_k(A, F(1), 0)
        with pytest.raises(DomainError):
            per_beta_k(A, F(1), 3)


class TestSumFormula:
    def test_split_into_ones(self):
        # per_m(A) as m copies of beta=1: sum over assignments of permanent
        # products
        A = random_matrix(3, "rational", scale=3, seed=31)
        for m in (2, 3):
            assert sum_formula_rhs(A, [F(1)] * m) == per_alpha_dp(A, F(m))

    def test_mixed_betas(self):
        A = random_matrix(4, "rational", scale=3, seed=32)
        betas = [F(1, 2), F(-2), F(5, 3)]
        total = sum(betas, F(0))
        assert sum_formula_rhs(A, betas) == per_alpha_dp(A, total)

    def test_complex_matrix(self):
        A = random_matrix(3, "complex-rational", scale=3, seed=33)
        betas = [F(1, 2), F(3, 4)]
        assert sum_formula_rhs(A, betas) == per_alpha_dp(A, F(5, 4))

    def test_empty_matrix(self):
        A = Matrix([], kind="rational")
        assert sum_formula_rhs(A, [F(1), F(2)]) == 1

    def test_no_betas(self):
        with pytest.raises(DomainError):
            sum_formula_rhs(Matrix.identity(2, "rational"), [])

    def test_assignment_cap(self):
        A = random_matrix(5, "rational", scale=2, seed=34)
        with pytest.raises(CapacityError):
            sum_formula_rhs(A, [F(1)] * 3, cap=200)


class TestProductFormula:
    def test_pinned_identity(self):
        # per_6(I_2) = 6^2 = 36 via alpha=3, beta=2
        I2 = Matrix.identity(2, "rational")
        assert product_formula_rhs(I2, F(3), F(2)) == 36
        assert per_alpha_dp(I2, F(6)) == 36

    @pytest.mark.parametrize("seed", range(4))
    def test_random(self, seed):
        A = random_matrix(4, "rational", scale=3, seed=seed + 41)
        for alpha, beta in [(F(1, 2), F(1)), (F(5, 2), F(-1)),
                            (F(-3, 4), F(2)), (F(2, 3), F(-5, 7))]:
            assert product_formula_rhs(A, alpha, beta) == \
                per_alpha_dp(A, alpha * beta)

    def test_beta_one_collapses_to_binomial_sum(self):
        A = random_matrix(3, "rational", scale=3, seed=43)
        a = F(7, 5)
        rhs = sum(
            gen_binomial(a, k) * per_beta_k(A, F(1), k) for k in range(1, 4)
        )
        assert product_formula_rhs(A, a, F(1)) == rhs == per_alpha_dp(A, a)

    def test_alpha_kind_gate(self):
        A = random_matrix(2, "rational", scale=3, seed=44)
        with pytest.raises(MixedModeError):
            product_formula_rhs(A, 0.5, F(1))

    def test_empty_rejected(self):
        with pytest.raises(DomainError):
            product_formula_rhs(Matrix([], kind="rational"), F(1), F(1))


class TestHalfFormula:
    @pytest.mark.parametrize("seed", range(4))
    def test_random(self, seed):
        A = random_symmetric_matrix(4, scale=3, seed=seed + 51)
        for a in (F(1), F(2), F(7, 3), F(-1, 2)):
            assert half_formula_rhs(A, a) == per_alpha_dp(A, a / 2)

    def test_asymmetric_rejected(self):
        A = random_matrix(3, "rational", scale=3, seed=52)
        assert not A.is_symmetric_entrywise()
        with pytest.raises(DomainError):
            half_formula_rhs(A, F(1))

    def test_terms_are_haf_products(self):
        # k = n term: every block is a singleton, haf(doubled([a])) = a
        A = random_symmetric_matrix(3, scale=3, seed=53)
        prod = F(1)
        for i in range(3):
            block = submatrix(A, 1 << i)
            assert hafnian(doubled(block)) == block.entry(0, 0)
            prod *= block.entry(0, 0)
