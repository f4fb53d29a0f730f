"""Kernel correctness against independent brute-force oracles.

The oracles here are written from the definitions, not shared with the
package: permanents by permutation sums, hafnians by recursive matching
enumeration, cycle sums by enumerating cyclic arrangements directly.
"""

import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alphaperm.errors import CapacityError, DomainError, MixedModeError
from alphaperm.kernels import (
    alpha_determinant,
    cycle_sum,
    cycle_sum_table,
    determinant,
    diagonal_product,
    hafnian,
    per_alpha_dp,
    per_alpha_naive,
    permanent,
    require_alpha_kind,
)
from alphaperm.matrices import (
    Matrix,
    doubled,
    indices_from_mask,
    random_matrix,
    random_symmetric_matrix,
    submatrix,
)
from alphaperm.scalars import GaussianRational

F = Fraction
G = GaussianRational


# ---------------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------------

def oracle_permanent(A):
    n = A.n
    total = 0
    for pi in itertools.permutations(range(n)):
        prod = 1
        for i in range(n):
            prod = prod * A.entry(i, pi[i])
        total = total + prod
    return total if n else Fraction(1)


def oracle_determinant(A):
    n = A.n
    total = 0
    for pi in itertools.permutations(range(n)):
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if pi[i] > pi[j]
        )
        prod = 1 if inversions % 2 == 0 else -1
        for i in range(n):
            prod = prod * A.entry(i, pi[i])
        total = total + prod
    return total if n else Fraction(1)


def oracle_hafnian(A):
    """Sum over perfect matchings by explicit recursion on index lists."""
    def rec(idx):
        if not idx:
            return 1
        i = idx[0]
        total = 0
        for pos in range(1, len(idx)):
            j = idx[pos]
            rest = idx[1:pos] + idx[pos + 1:]
            total = total + A.entry(i, j) * rec(rest)
        return total

    return rec(list(range(A.n)))


def oracle_per_alpha(A, alpha):
    n = A.n
    total = 0
    for pi in itertools.permutations(range(n)):
        seen = [False] * n
        cycles = 0
        for s in range(n):
            if not seen[s]:
                cycles += 1
                j = s
                while not seen[j]:
                    seen[j] = True
                    j = pi[j]
        prod = alpha ** cycles
        for i in range(n):
            prod = prod * A.entry(i, pi[i])
        total = total + prod
    return total if n else alpha ** 0


def oracle_cycle_sum(A, indices):
    """Sum over cyclic arrangements of the index set of the entry products."""
    indices = list(indices)
    if len(indices) == 1:
        return A.entry(indices[0], indices[0])
    first, rest = indices[0], indices[1:]
    total = 0
    for order in itertools.permutations(rest):
        cycle = (first,) + order
        prod = 1
        for a, b in zip(cycle, cycle[1:] + (first,)):
            prod = prod * A.entry(a, b)
        total = total + prod
    return total


# ---------------------------------------------------------------------------
# tests
# ---------------------------------------------------------------------------

class TestPermanent:
    def test_small_pinned(self):
        assert permanent(Matrix([], kind="rational")) == 1
        assert permanent(Matrix([[F(7)]])) == 7
        assert permanent(Matrix([[F(1), F(2)], [F(3), F(4)]])) == 10
        assert permanent(Matrix.identity(5, "rational")) == 1

    def test_all_ones(self):
        for n in range(1, 7):
            A = Matrix([[F(1)] * n for _ in range(n)])
            assert permanent(A) == math.factorial(n)

    @pytest.mark.parametrize("n", range(6))
    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_vs_oracle(self, n, seed):
        A = random_matrix(n, "rational", scale=4, seed=seed)
        assert permanent(A) == oracle_permanent(A)

    def test_vs_oracle_complex(self):
        for seed in range(4):
            A = random_matrix(4, "complex-rational", scale=3, seed=seed)
            assert permanent(A) == oracle_permanent(A)

    def test_cap(self):
        A = Matrix.identity(6, "rational")
        with pytest.raises(CapacityError):
            permanent(A, cap=5)


class TestDeterminant:
    @pytest.mark.parametrize("n", range(6))
    @pytest.mark.parametrize("seed", [3, 4, 5])
    def test_vs_oracle(self, n, seed):
        A = random_matrix(n, "rational", scale=4, seed=seed)
        assert determinant(A) == oracle_determinant(A)

    def test_vs_oracle_complex(self):
        for seed in range(4):
            A = random_matrix(4, "complex-rational", scale=3, seed=seed)
            assert determinant(A) == oracle_determinant(A)

    def test_singular(self):
        A = Matrix([[F(1), F(2)], [F(2), F(4)]])
        assert determinant(A) == 0
        B = Matrix([[F(0), F(1)], [F(0), F(2)]])
        assert determinant(B) == 0

    def test_needs_pivoting(self):
        A = Matrix([[F(0), F(1)], [F(1), F(0)]])
        assert determinant(A) == -1

    def test_float_route(self):
        A = random_matrix(5, "rational", scale=4, seed=8)
        exact = determinant(A)
        approx = determinant(A.to_float())
        assert approx == pytest.approx(float(exact), rel=1e-10, abs=1e-12)


class TestHafnian:
    def test_small_pinned(self):
        assert hafnian(Matrix([], kind="rational")) == 1
        A = Matrix([[F(0), F(5)], [F(5), F(0)]], real_symmetric=True)
        assert hafnian(A) == 5
        # diagonal entries never contribute
        B = Matrix([[F(9), F(5)], [F(5), F(9)]], real_symmetric=True)
        assert hafnian(B) == 5

    def test_doubled_identity(self):
        # doubled I_2 is the 4x4 all-ones-in-blocks pattern with 3 matchings:
        # {12,34}, {13,24}, {14,23} contribute 0*0? enumerated by the oracle
        D = doubled(Matrix.identity(2, "rational"))
        assert hafnian(D) == oracle_hafnian(D)

    def test_odd_dimension_rejected(self):
        with pytest.raises(DomainError):
            hafnian(Matrix([[F(1)]]))

    def test_asymmetric_rejected(self):
        with pytest.raises(DomainError):
            hafnian(Matrix([[F(0), F(1)], [F(2), F(0)]]))

    @pytest.mark.parametrize("n", [2, 4, 6, 8])
    def test_vs_oracle(self, n):
        for seed in range(3):
            A = random_symmetric_matrix(n, scale=4, seed=seed + 10 * n)
            assert hafnian(A) == oracle_hafnian(A)

    def test_matching_count(self):
        for n in (2, 4, 6, 8):
            A = Matrix([[F(1)] * n for _ in range(n)], real_symmetric=True)
            expect = 1
            for k in range(1, n, 2):
                expect *= k
            assert hafnian(A) == expect  # (n-1)!! perfect matchings

    def test_cap(self):
        A = Matrix([[F(1)] * 8 for _ in range(8)], real_symmetric=True)
        with pytest.raises(CapacityError):
            hafnian(A, cap=7)


class TestCycleSum:
    @pytest.mark.parametrize("seed", [0, 1])
    def test_vs_oracle(self, seed):
        A = random_matrix(5, "rational", scale=4, seed=seed)
        for size in range(1, 5):
            for combo in itertools.combinations(range(5), size):
                mask = 0
                for i in combo:
                    mask |= 1 << i
                assert cycle_sum(A, mask) == oracle_cycle_sum(A, combo), combo

    def test_table_matches_single(self):
        A = random_matrix(5, "complex-rational", scale=3, seed=7)
        table = cycle_sum_table(A)
        for mask in range(1, 1 << 5):
            assert table[mask] == cycle_sum(A, mask)

    def test_empty_mask_rejected(self):
        A = random_matrix(3, "rational", scale=3, seed=0)
        with pytest.raises(DomainError):
            cycle_sum(A, 0)


class TestPerAlpha:
    def test_empty_matrix_is_one(self):
        A = Matrix([], kind="rational")
        assert per_alpha_dp(A, F(7, 3)) == 1
        assert per_alpha_naive(A, F(7, 3)) == 1

    def test_worked_2x2(self):
        # [[1,2],[3,4]]: identity perm has 2 cycles (a^2 * 4), swap has 1
        # cycle (a * 6)
        A = Matrix([[F(1), F(2)], [F(3), F(4)]])
        a = F(5, 3)
        assert per_alpha_naive(A, a) == 4 * a * a + 6 * a
        assert per_alpha_dp(A, a) == 4 * a * a + 6 * a
        assert per_alpha_dp(A, F(-1)) == -2  # (-1)^n det A

    @pytest.mark.parametrize("n", range(7))
    def test_dp_vs_naive_vs_oracle(self, n):
        for seed in (0, 1):
            A = random_matrix(n, "rational", scale=4, seed=seed + 10 * n)
            for a in (F(0), F(1), F(-1), F(1, 2), F(-7, 5), F(3)):
                expect = oracle_per_alpha(A, a)
                assert per_alpha_naive(A, a) == expect
                assert per_alpha_dp(A, a) == expect

    def test_complex_alpha_complex_matrix(self):
        A = random_matrix(4, "complex-rational", scale=3, seed=2)
        a = G(F(1, 2), F(-1, 3))
        expect = oracle_per_alpha(A, a)
        assert per_alpha_naive(A, a) == expect
        assert per_alpha_dp(A, a) == expect

    def test_specializations(self):
        for seed in range(5):
            A = random_matrix(5, "rational", scale=4, seed=seed)
            n = A.n
            assert per_alpha_dp(A, F(1)) == permanent(A)
            det_sign = determinant(A) if n % 2 == 0 else -determinant(A)
            assert per_alpha_dp(A, F(-1)) == det_sign

    def test_wick_half(self):
        for seed in range(5):
            A = random_symmetric_matrix(4, scale=4, seed=seed)
            lhs = per_alpha_dp(A, F(1, 2)) * 2 ** 4
            assert lhs == hafnian(doubled(A))

    def test_alpha_kind_mixing_rejected(self):
        A = random_matrix(3, "rational", scale=3, seed=0)
        with pytest.raises(MixedModeError):
            per_alpha_dp(A, 0.5)
        with pytest.raises(MixedModeError):
            per_alpha_naive(A, 0.5)
        with pytest.raises(MixedModeError):
            require_alpha_kind(A, 1.5)

    def test_float_matrix_takes_float_alpha(self):
        A = random_matrix(4, "rational", scale=3, seed=3)
        exact = per_alpha_dp(A, F(3, 2))
        approx = per_alpha_dp(A.to_float(), 1.5)
        assert approx == pytest.approx(float(exact), rel=1e-10)

    def test_caps(self):
        A = Matrix.identity(4, "rational")
        with pytest.raises(CapacityError):
            per_alpha_dp(A, F(1), cap=3)
        with pytest.raises(CapacityError):
            per_alpha_naive(A, F(1), cap=3)

    def test_identity_and_all_ones_values(self):
        a = F(2, 3)
        for n in range(1, 6):
            # only the identity permutation survives on I_n
            assert per_alpha_dp(Matrix.identity(n, "rational"), a) == a ** n
            # on the all-ones matrix the cycle-counting identity gives the
            # rising factorial a(a+1)...(a+n-1)
            J = Matrix([[F(1)] * n for _ in range(n)], real_symmetric=True)
            expect = F(1)
            for k in range(n):
                expect *= a + k
            assert per_alpha_dp(J, a) == expect

    @given(st.integers(0, 10 ** 6))
    @settings(max_examples=20, deadline=None)
    def test_dp_vs_naive_random(self, seed):
        A = random_matrix(4, "rational", scale=5, seed=seed)
        a = F(seed % 13 - 6, 1 + seed % 7)
        assert per_alpha_dp(A, a) == per_alpha_naive(A, a)


class TestAlphaDeterminant:
    def test_specializations(self):
        for seed in range(4):
            A = random_matrix(4, "rational", scale=4, seed=seed)
            assert alpha_determinant(A, F(1)) == permanent(A)
            assert alpha_determinant(A, F(-1)) == determinant(A)

    def test_scaling_identity(self):
        A = random_matrix(3, "rational", scale=4, seed=6)
        a = F(3, 7)
        assert alpha_determinant(A, a) == a ** 3 * per_alpha_dp(A, 1 / a)

    def test_zero_alpha_rejected(self):
        A = random_matrix(2, "rational", scale=3, seed=0)
        with pytest.raises(DomainError):
            alpha_determinant(A, F(0))


class TestDiagonalProduct:
    def test_values(self):
        A = Matrix([[F(2), F(5)], [F(7), F(3)]])
        assert diagonal_product(A) == 6
        assert diagonal_product(Matrix([], kind="rational")) == 1
