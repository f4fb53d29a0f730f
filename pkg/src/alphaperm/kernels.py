"""Alpha-permanents, permanents, determinants, and hafnians.

For an n x n matrix A and a scalar alpha,

    per_alpha(A) = sum over permutations pi of alpha^(number of cycles of pi)
                   times prod_i a_{i, pi(i)}

so per_1 is the permanent and per_{-1}(A) = (-1)^n det(A). The empty matrix
has per_alpha = 1 (empty product, empty permutation with zero cycles).

Two independent algorithms compute per_alpha:

  * per_alpha_naive walks all n! permutations; it is the trusted oracle.
  * per_alpha_dp runs in O(3^n) on cycle sums: with C(S) the sum over all
    cyclic arrangements of the index set S of the product of matrix entries
    along the cycle, the quantity f(T) = per_alpha(A[T]) satisfies

        f(T) = alpha * sum over S subseteq T with min(T) in S
               of C(S) * f(T minus S)

    because the cycle through min(T) is distinguished. Cycle sums come from a
    walk dynamic program anchored at the smallest element of each subset.

The hafnian of a symmetric even-dimensional matrix sums, over all perfect
matchings of the index set, the product of matched entries; the diagonal is
ignored. haf of the empty matrix is 1.

All kernels accept exact (Fraction / GaussianRational) and float matrices.
Floating per_alpha_dp, permanent, and hafnian calls are routed to the
fastpath module. Exact inputs demand exact alpha, float inputs demand float
alpha; anything else raises MixedModeError.

Size caps are configuration: pass cap=... explicitly or override the
defaults with environment variables ALPHAPERM_CAP_NAIVE, _DP, _RYSER,
_HAFNIAN, _ASSIGNMENTS. Exceeding a cap raises CapacityError.
"""

from __future__ import annotations

import itertools
import os

import numpy as np

from .errors import CapacityError, DomainError, MixedModeError
from .matrices import Matrix, full_mask
from .scalars import (
    FLOAT_KINDS,
    as_scalar,
    kind_is_complex,
    kind_is_exact,
    one_like,
    one_of_kind,
    scalar_kind,
    to_float_scalar,
)

DEFAULT_CAPS = {
    "naive": 10,
    "dp": 18,
    "ryser": 24,
    "hafnian": 20,
    "assignments": 10_000_000,
}


def default_cap(name: str) -> int:
    env = os.environ.get("ALPHAPERM_CAP_" + name.upper().replace("-", "_"))
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise CapacityError("bad cap override %r for %s" % (env, name))
    return DEFAULT_CAPS[name]


def _check_cap(name: str, size: int, cap) -> None:
    limit = default_cap(name) if cap is None else cap
    if size > limit:
        raise CapacityError(
            "%s kernel: size %d exceeds cap %d" % (name, size, limit)
        )


def require_alpha_kind(A: Matrix, alpha):
    """Normalize alpha and reject exact/float mixing against A's kind."""
    alpha = as_scalar(alpha)
    a_exact = kind_is_exact(scalar_kind(alpha))
    m_exact = kind_is_exact(A.kind)
    if a_exact != m_exact:
        raise MixedModeError(
            "matrix kind %s with alpha of kind %s; convert explicitly"
            % (A.kind, scalar_kind(alpha))
        )
    return alpha


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------

def per_alpha_naive(A: Matrix, alpha, cap=None):
    """per_alpha by direct summation over all n! permutations.

    Exponentially slower than per_alpha_dp but with no shared machinery;
    every other kernel is checked against this one.
    """
    alpha = require_alpha_kind(A, alpha)
    n = A.n
    _check_cap("naive", n, cap)
    if n == 0:
        return one_like(alpha)
    rows = A.rows
    total = (alpha - alpha) * one_of_kind(A.kind)
    for pi in itertools.permutations(range(n)):
        prod = rows[0][pi[0]]
        for i in range(1, n):
            prod = prod * rows[i][pi[i]]
        if not prod:
            continue
        seen = [False] * n
        cycles = 0
        for i in range(n):
            if not seen[i]:
                cycles += 1
                j = i
                while not seen[j]:
                    seen[j] = True
                    j = pi[j]
        total = total + alpha ** cycles * prod
    return total


# ---------------------------------------------------------------------------
# cycle sums
# ---------------------------------------------------------------------------

def cycle_sum(A: Matrix, mask: int):
    """C(S): sum over cyclic arrangements of S of the entry product.

    For S = {i}, C = a_ii; for S = {i, j}, C = a_ij * a_ji. Computed by a
    walk dynamic program restricted to subsets of S, so a single subset does
    not pay for the full table.
    """
    if mask <= 0 or mask >> A.n:
        raise DomainError("cycle_sum needs a nonempty mask within 0..n-1")
    _check_cap("dp", mask.bit_count(), cap=None)
    rows = A.rows
    anchor = (mask & -mask).bit_length() - 1
    if mask == 1 << anchor:
        return rows[anchor][anchor]
    rest = mask ^ (1 << anchor)
    # walk[v] over submasks: weight of all paths anchor -> v visiting the
    # submask's vertices; iterate submasks of rest in increasing order so
    # every proper submask is finished first.
    walk = {}
    sub = 0
    while True:
        sub = (sub - rest) & rest
        if sub == 0:
            break
        m = sub
        while m:
            vbit = m & -m
            m ^= vbit
            v = vbit.bit_length() - 1
            prev = sub ^ vbit
            if prev == 0:
                w = rows[anchor][v]
            else:
                w = None
                pm = prev
                while pm:
                    ubit = pm & -pm
                    pm ^= ubit
                    u = ubit.bit_length() - 1
                    t = walk[(prev, u)] * rows[u][v]
                    w = t if w is None else w + t
            walk[(sub, v)] = w
    total = None
    m = rest
    while m:
        vbit = m & -m
        m ^= vbit
        v = vbit.bit_length() - 1
        t = walk[(rest, v)] * rows[v][anchor]
        total = t if total is None else total + t
    return total


def cycle_sum_table(A: Matrix, cap=None) -> list:
    """C(S) for every nonempty subset S of 0..n-1, indexed by bitmask.

    Entry 0 is None. The table drives per_alpha_dp and can be shared across
    several alpha values for the same matrix.
    """
    n = A.n
    _check_cap("dp", n, cap)
    rows = A.rows
    size = 1 << n
    C = [None] * size
    # walk[mask][v]: path weights anchor(mask) -> v over the vertex set mask,
    # where anchor(mask) is the smallest element. Masks ascend, so the
    # (mask minus v) entries are always ready.
    walk = [None] * size
    for mask in range(1, size):
        lowbit = mask & -mask
        anchor = lowbit.bit_length() - 1
        if mask == lowbit:
            C[mask] = rows[anchor][anchor]
            continue
        w = {}
        closing = None
        m = mask ^ lowbit
        while m:
            vbit = m & -m
            m ^= vbit
            v = vbit.bit_length() - 1
            sub = mask ^ vbit
            if sub == lowbit:
                val = rows[anchor][v]
            else:
                val = None
                prev = walk[sub]
                for u, pu in prev.items():
                    t = pu * rows[u][v]
                    val = t if val is None else val + t
            w[v] = val
            t = val * rows[v][anchor]
            closing = t if closing is None else closing + t
        walk[mask] = w
        C[mask] = closing
    return C


def per_alpha_dp(A: Matrix, alpha, cap=None, cycle_table=None):
    """per_alpha via the cycle-sum decomposition, O(3^n) subset pairs.

    cycle_table, if given, must be cycle_sum_table(A); pass it to amortize
    the table across several alpha values.
    """
    alpha = require_alpha_kind(A, alpha)
    n = A.n
    _check_cap("dp", n, cap)
    if n == 0:
        return one_like(alpha)
    if A.kind in FLOAT_KINDS and cycle_table is None:
        from . import fastpath
        value = fastpath.per_alpha_dp(A.to_numpy(), to_float_scalar(alpha))
        return value
    C = cycle_table if cycle_table is not None else cycle_sum_table(A, cap=cap)
    size = 1 << n
    f = [None] * size
    f[0] = one_like(alpha)
    for mask in range(1, size):
        lowbit = mask & -mask
        rest = mask ^ lowbit
        acc = None
        s = rest
        while True:
            t = C[lowbit | s] * f[rest ^ s]
            acc = t if acc is None else acc + t
            if s == 0:
                break
            s = (s - 1) & rest
        f[mask] = alpha * acc
    return f[size - 1]


# ---------------------------------------------------------------------------
# specializations
# ---------------------------------------------------------------------------

def permanent(A: Matrix, cap=None):
    """Permanent by inclusion-exclusion over column subsets (Gray-coded).

    per(A) = (-1)^n sum over S of (-1)^{|S|} prod_i (sum_{j in S} a_ij);
    each Gray step flips one column in or out, so row sums update in O(n).
    """
    n = A.n
    _check_cap("ryser", n, cap)
    if n == 0:
        return one_of_kind(A.kind)
    if A.kind in FLOAT_KINDS:
        from . import fastpath
        return fastpath.permanent(A.to_numpy())
    rows = A.rows
    zero = rows[0][0] - rows[0][0]
    sums = [zero] * n
    total = zero
    gray = 0
    for k in range(1, 1 << n):
        j = (k & -k).bit_length() - 1
        bit = 1 << j
        gray ^= bit
        if gray & bit:
            for i in range(n):
                sums[i] = sums[i] + rows[i][j]
        else:
            for i in range(n):
                sums[i] = sums[i] - rows[i][j]
        prod = sums[0]
        for i in range(1, n):
            prod = prod * sums[i]
        # popcount(gray) flips parity once per step, so it equals k mod 2.
        if k & 1:
            total = total - prod
        else:
            total = total + prod
    return total if n % 2 == 0 else -total


def determinant(A: Matrix):
    """Determinant: fraction-free Bareiss elimination for exact kinds,
    numpy's pivoted LU for float kinds."""
    n = A.n
    if n == 0:
        return one_of_kind(A.kind)
    if A.kind in FLOAT_KINDS:
        value = np.linalg.det(A.to_numpy())
        return complex(value) if kind_is_complex(A.kind) else float(value)
    m = [list(row) for row in A.rows]
    one = one_of_kind(A.kind)
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return one - one
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def hafnian(A: Matrix, cap=None):
    """Hafnian of a symmetric matrix of even dimension.

    Recurses on the lowest unmatched index: haf(S) = sum over partners j of
    a_{i,j} * haf(S minus {i, j}), memoized on the index-set bitmask.
    """
    n = A.n
    _check_cap("hafnian", n, cap)
    if n % 2:
        raise DomainError("hafnian needs even dimension, got %d" % n)
    if not A.is_symmetric_entrywise():
        raise DomainError("hafnian needs a symmetric matrix")
    if n == 0:
        return one_of_kind(A.kind)
    if A.kind in FLOAT_KINDS:
        from . import fastpath
        return fastpath.hafnian(A.to_numpy())
    rows = A.rows
    memo = {0: one_of_kind(A.kind)}

    def rec(mask: int):
        got = memo.get(mask)
        if got is not None:
            return got
        ibit = mask & -mask
        i = ibit.bit_length() - 1
        rest = mask ^ ibit
        acc = None
        m = rest
        while m:
            jbit = m & -m
            m ^= jbit
            j = jbit.bit_length() - 1
            entry = rows[i][j]
            if entry:
                t = entry * rec(rest ^ jbit)
                acc = t if acc is None else acc + t
        if acc is None:
            acc = memo[0] - memo[0]
        memo[mask] = acc
        return acc

    return rec(full_mask(n))


def alpha_determinant(A: Matrix, alpha, cap=None):
    """det_alpha(A) = alpha^n per_{1/alpha}(A); alpha must be invertible."""
    alpha = require_alpha_kind(A, alpha)
    if not alpha:
        raise DomainError("alpha_determinant needs alpha != 0")
    inv = one_like(alpha) / alpha
    return alpha ** A.n * per_alpha_dp(A, inv, cap=cap)


def diagonal_product(A: Matrix):
    prod = one_of_kind(A.kind)
    for i in range(A.n):
        prod = prod * A.rows[i][i]
    return prod
