"""Set partitions of {0..n-1} and the expansion formulas built on them.

A partition is carried as a restricted-growth string (rgs): rgs[i] is the
block label of element i, labels appear in order of first use. Blocks are
exposed as index-set bitmasks ordered by smallest element.

The expansion formulas (B = A[I] denotes principal submatrices):

  sum formula      per_{b_1+...+b_m}(A) = sum over functions
                   g: {0..n-1} -> {1..m} of prod_j per_{b_j}(A[g^-1(j)]),
                   empty preimages contributing 1.

  per_beta_k       per_beta(A, k) = sum over ordered k-tuples of disjoint
                   nonempty blocks covering {0..n-1} of prod per_beta(block)
                   = k! * sum over k-block partitions of the same product.

  product formula  per_{alpha*beta}(A) = sum_{k=1}^n binom(alpha, k)
                   * per_beta(A, k).

  half formula     per_{alpha/2}(A) = 2^-n * sum_{k=1}^n binom(alpha, k)
                   * k! * sum over k-block partitions of
                     prod_j haf(doubled(A[I_j]))   (A real symmetric).
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .errors import CapacityError, DomainError
from .kernels import default_cap, hafnian, per_alpha_dp, require_alpha_kind
from .matrices import Matrix, doubled, submatrix
from .scalars import as_scalar, gen_binomial, kind_is_exact, one_like, scalar_kind


class SetPartition:
    """A set partition of {0..n-1} in restricted-growth form."""

    __slots__ = ("rgs", "blocks")

    def __init__(self, rgs):
        rgs = tuple(rgs)
        k = 0
        blocks = []
        for i, label in enumerate(rgs):
            if label == k:
                blocks.append(0)
                k += 1
            elif not 0 <= label < k:
                raise DomainError("not a restricted-growth string: %r" % (rgs,))
            blocks[label] |= 1 << i
        object.__setattr__(self, "rgs", rgs)
        object.__setattr__(self, "blocks", tuple(blocks))

    def __setattr__(self, name, value):
        raise AttributeError("SetPartition is immutable")

    @property
    def n(self) -> int:
        return len(self.rgs)

    @property
    def k(self) -> int:
        return len(self.blocks)

    def shape(self) -> tuple:
        """Block sizes, largest first."""
        return tuple(sorted((b.bit_count() for b in self.blocks), reverse=True))

    def __eq__(self, other):
        if not isinstance(other, SetPartition):
            return NotImplemented
        return self.rgs == other.rgs

    def __hash__(self):
        return hash(self.rgs)

    def __repr__(self):
        return "SetPartition(%r)" % (self.rgs,)


def enumerate_partitions(n: int, k: int = None):
    """Yield all set partitions of {0..n-1} in lexicographic rgs order.

    With k given, only partitions with exactly k blocks (still in lex order).
    """
    if n < 0:
        raise DomainError("enumerate_partitions needs n >= 0")
    if n == 0:
        # the empty set has exactly one partition, with no blocks
        if k in (None, 0):
            yield SetPartition(())
        return
    if k is not None and not 1 <= k <= n:
        raise DomainError("block count k=%r outside 1..%d" % (k, n))
    rgs = [0] * n
    while True:
        part = SetPartition(rgs)
        if k is None or part.k == k:
            yield part
        # Advance: rightmost position that can grow by one; reset the tail.
        i = n - 1
        while i > 0:
            prefix_max = max(rgs[:i])
            if rgs[i] <= prefix_max:
                rgs[i] += 1
                for j in range(i + 1, n):
                    rgs[j] = 0
                break
            i -= 1
        else:
            return


def enumerate_shape_partitions(n: int, shape):
    """Partitions of {0..n-1} whose sorted block sizes equal the given shape."""
    shape = tuple(sorted(shape, reverse=True))
    if sum(shape) != n or any(s < 1 for s in shape):
        raise DomainError("shape %r is not a partition of %d" % (shape, n))
    for part in enumerate_partitions(n, k=len(shape)):
        if part.shape() == shape:
            yield part


def bell_number(n: int) -> int:
    """Number of set partitions of an n-set (Bell triangle recurrence)."""
    if n < 0:
        raise DomainError("bell_number needs n >= 0")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into exactly k blocks."""
    if n < 0 or k < 0:
        raise DomainError("stirling2 needs n, k >= 0")
    if k > n:
        return 0
    prev = [1] + [0] * k
    for m in range(1, n + 1):
        cur = [0] * (k + 1)
        for j in range(1, min(m, k) + 1):
            cur[j] = j * prev[j] + prev[j - 1]
        prev = cur
    return prev[k]


def shape_partition_count(n: int, shape) -> int:
    """Number of set partitions of an n-set with the given block sizes."""
    shape = tuple(sorted(shape, reverse=True))
    if sum(shape) != n or any(s < 1 for s in shape):
        raise DomainError("shape %r is not a partition of %d" % (shape, n))
    count = math.factorial(n)
    for s in shape:
        count //= math.factorial(s)
    mult = {}
    for s in shape:
        mult[s] = mult.get(s, 0) + 1
    for m in mult.values():
        count //= math.factorial(m)
    return count


# ---------------------------------------------------------------------------
# expansion formulas
# ---------------------------------------------------------------------------

def per_beta_k(A: Matrix, beta, k: int, cap=None):
    """per_beta(A, k): ordered k-tuples of nonempty blocks, as k! times the
    unordered sum."""
    n = A.n
    if not 1 <= k <= n:
        raise DomainError("per_beta_k needs 1 <= k <= n, got k=%r n=%d" % (k, n))
    beta = as_scalar(beta)
    block_cache = {}
    total = None
    for part in enumerate_partitions(n, k=k):
        prod = None
        for mask in part.blocks:
            v = block_cache.get(mask)
            if v is None:
                v = per_alpha_dp(submatrix(A, mask), beta, cap=cap)
                block_cache[mask] = v
            prod = v if prod is None else prod * v
        total = prod if total is None else total + prod
    return math.factorial(k) * total


def sum_formula_rhs(A: Matrix, betas, cap=None):
    """Right-hand side of the sum formula for per_{b_1 + ... + b_m}(A).

    Sums over all m^n assignments of indices to the m labels; the number of
    assignments is capped (default 10_000_000, override via cap or
    ALPHAPERM_CAP_ASSIGNMENTS).
    """
    betas = [as_scalar(b) for b in betas]
    if not betas:
        raise DomainError("sum_formula_rhs needs at least one beta")
    n = A.n
    m = len(betas)
    limit = default_cap("assignments") if cap is None else cap
    if m ** n > limit:
        raise CapacityError(
            "sum formula: %d^%d assignments exceed cap %d" % (m, n, limit)
        )
    one = one_like(betas[0])
    if n == 0:
        return one
    cache = {}
    total = None
    for assignment in itertools.product(range(m), repeat=n):
        masks = [0] * m
        for i, label in enumerate(assignment):
            masks[label] |= 1 << i
        prod = one
        for j, mask in enumerate(masks):
            if mask == 0:
                continue
            key = (j, mask)
            v = cache.get(key)
            if v is None:
                v = per_alpha_dp(submatrix(A, mask), betas[j])
                cache[key] = v
            prod = prod * v
        total = prod if total is None else total + prod
    return total


def product_formula_rhs(A: Matrix, alpha, beta, cap=None):
    """sum_{k=1}^n binom(alpha, k) per_beta(A, k), equal to per_{alpha beta}(A)."""
    n = A.n
    if n < 1:
        raise DomainError("product_formula_rhs needs n >= 1")
    alpha = require_alpha_kind(A, alpha)
    total = None
    for k in range(1, n + 1):
        term = gen_binomial(alpha, k) * per_beta_k(A, beta, k, cap=cap)
        total = term if total is None else total + term
    return total


def half_formula_rhs(A: Matrix, alpha, cap=None):
    """Hafnian expansion of per_{alpha/2} for real symmetric A:

        2^-n sum_{k=1}^n binom(alpha, k) k!
             sum over k-block partitions of prod_j haf(doubled(A[I_j]))
    """
    n = A.n
    if n < 1:
        raise DomainError("half_formula_rhs needs n >= 1")
    if not A.is_symmetric_entrywise():
        raise DomainError("half_formula_rhs needs a symmetric matrix")
    alpha = require_alpha_kind(A, alpha)
    haf_cache = {}

    def block_haf(mask):
        v = haf_cache.get(mask)
        if v is None:
            v = hafnian(doubled(submatrix(A, mask)), cap=cap)
            haf_cache[mask] = v
        return v

    by_k = {}
    for part in enumerate_partitions(n):
        prod = None
        for mask in part.blocks:
            v = block_haf(mask)
            prod = v if prod is None else prod * v
        k = part.k
        by_k[k] = prod if k not in by_k else by_k[k] + prod
    total = None
    for k in range(1, n + 1):
        term = gen_binomial(alpha, k) * math.factorial(k) * by_k[k]
        total = term if total is None else total + term
    if kind_is_exact(scalar_kind(alpha)) and kind_is_exact(A.kind):
        return total * Fraction(1, 2 ** n)
    return total / float(2 ** n)
