"""Square matrices over the four scalar kinds, plus instance generation and I/O.

Index sets are plain Python ints used as bitmasks over row/column indices
0..n-1; helpers below convert between masks and index tuples. A block split
of [n] at position m is the pair of masks (low m bits, the rest).

Matrix text format (whitespace-delimited, '#' starts a comment line):

    n 3
    field rational
    flags real-symmetric hermitian
    1 1/2 0
    1/2 2 3
    0 3 5/4

`field` is one of rational, complex-rational, float. `flags` is a possibly
empty subset of {real-symmetric, hermitian}; claimed flags are verified
entrywise on read. Serialization is canonical, so equal matrices produce
byte-identical files and the format round-trips exactly.
"""

from __future__ import annotations

import hashlib
import io
import random
from fractions import Fraction

import numpy as np

from .errors import (
    DomainError,
    MatrixFormatError,
    MixedModeError,
    ScalarFormatError,
)
from .scalars import (
    COMPLEX_FLOAT,
    COMPLEX_RATIONAL,
    FLOAT,
    RATIONAL,
    GaussianRational,
    as_scalar,
    conj_scalar,
    format_scalar,
    kind_is_complex,
    kind_is_exact,
    parse_scalar,
    scalar_kind,
    to_float_scalar,
)

# ---------------------------------------------------------------------------
# bitmask index sets
# ---------------------------------------------------------------------------

def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_from_indices(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def indices_from_mask(mask: int) -> tuple:
    out = []
    i = 0
    while mask >> i:
        if (mask >> i) & 1:
            out.append(i)
        i += 1
    return tuple(out)


def iter_submasks(mask: int):
    """All submasks of mask in increasing numeric order, including 0 and mask."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def split_masks(n: int, m: int) -> tuple:
    """Masks of the leading block {0..m-1} and trailing block {m..n-1}."""
    if not 1 <= m <= n - 1:
        raise DomainError("split position m=%d outside 1..%d" % (m, n - 1))
    low = full_mask(m)
    return low, full_mask(n) ^ low


# ---------------------------------------------------------------------------
# Matrix
# ---------------------------------------------------------------------------

class Matrix:
    """Immutable square matrix with a uniform scalar kind.

    The real_symmetric and hermitian booleans are claims carried with the
    matrix (set by constructors that guarantee them, or by file flags, which
    are verified on read). Operations that mathematically require symmetry
    check entries directly rather than trusting the claim.
    """

    __slots__ = ("n", "rows", "kind", "real_symmetric", "hermitian")

    def __init__(self, rows, kind=None, real_symmetric=False, hermitian=False):
        rows = tuple(tuple(as_scalar(x) for x in row) for row in rows)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise DomainError(
                    "matrix must be square, got row of length %d in a %d-row matrix"
                    % (len(row), n)
                )
        kinds = {scalar_kind(x) for row in rows for x in row}
        if kind is not None:
            kinds.add(kind)
        elif not kinds:
            kinds.add(RATIONAL)
        exact = kinds & {RATIONAL, COMPLEX_RATIONAL}
        inexact = kinds - exact
        if exact and inexact:
            raise MixedModeError(
                "matrix mixes exact and float entries: %s"
                % ", ".join(sorted(kinds))
            )
        # within one lane, promote to the complex kind when both appear
        if exact:
            kind = COMPLEX_RATIONAL if COMPLEX_RATIONAL in kinds else RATIONAL
            if kind == COMPLEX_RATIONAL:
                rows = tuple(
                    tuple(
                        x if isinstance(x, GaussianRational)
                        else GaussianRational(x)
                        for x in row
                    )
                    for row in rows
                )
        else:
            kind = COMPLEX_FLOAT if COMPLEX_FLOAT in kinds else FLOAT
            if kind == COMPLEX_FLOAT:
                rows = tuple(tuple(complex(x) for x in row) for row in rows)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "real_symmetric", bool(real_symmetric))
        object.__setattr__(self, "hermitian", bool(hermitian or
                                                   real_symmetric))
        self.validate_flags()

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int, kind: str = RATIONAL) -> "Matrix":
        from .scalars import one_of_kind, zero_like
        one = one_of_kind(kind)
        zero = zero_like(one)
        rows = [
            [one if i == j else zero for j in range(n)] for i in range(n)
        ]
        return cls(rows, kind=kind, real_symmetric=not kind_is_complex(kind),
                   hermitian=True)

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def diagonal(self) -> tuple:
        return tuple(self.rows[i][i] for i in range(self.n))

    def __eq__(self, other):
        # entry equality decides; the flags are derived claims, not identity
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Matrix(n=%d, kind=%s)" % (self.n, self.kind)

    def is_symmetric_entrywise(self) -> bool:
        r = self.rows
        return all(
            r[i][j] == r[j][i] for i in range(self.n) for j in range(i + 1, self.n)
        )

    def is_hermitian_entrywise(self) -> bool:
        r = self.rows
        if not kind_is_complex(self.kind):
            return self.is_symmetric_entrywise()
        for i in range(self.n):
            if conj_scalar(r[i][i]) != r[i][i]:
                return False
            for j in range(i + 1, self.n):
                if r[j][i] != conj_scalar(r[i][j]):
                    return False
        return True

    def validate_flags(self):
        """Raise if a claimed flag does not hold entrywise."""
        if self.real_symmetric:
            if kind_is_complex(self.kind) or not self.is_symmetric_entrywise():
                raise MatrixFormatError("real-symmetric flag does not hold")
        if self.hermitian and not self.is_hermitian_entrywise():
            raise MatrixFormatError("hermitian flag does not hold")

    def to_float(self) -> "Matrix":
        """Explicit conversion of an exact matrix to the float field."""
        if self.kind in (FLOAT, COMPLEX_FLOAT):
            return self
        kind = COMPLEX_FLOAT if kind_is_complex(self.kind) else FLOAT
        rows = [[to_float_scalar(x) for x in row] for row in self.rows]
        return Matrix(rows, kind=kind, real_symmetric=self.real_symmetric,
                      hermitian=self.hermitian)

    def to_numpy(self) -> np.ndarray:
        dtype = np.complex128 if kind_is_complex(self.kind) else np.float64
        a = np.empty((self.n, self.n), dtype=dtype)
        for i in range(self.n):
            for j in range(self.n):
                a[i, j] = to_float_scalar(self.rows[i][j])
        return a

    def transpose(self) -> "Matrix":
        rows = [
            [self.rows[j][i] for j in range(self.n)] for i in range(self.n)
        ]
        return Matrix(rows, kind=self.kind,
                      real_symmetric=self.real_symmetric,
                      hermitian=False)

    def conjugate_transpose(self) -> "Matrix":
        rows = [
            [conj_scalar(self.rows[j][i]) for j in range(self.n)]
            for i in range(self.n)
        ]
        return Matrix(rows, kind=self.kind,
                      real_symmetric=self.real_symmetric,
                      hermitian=self.hermitian)


def submatrix(A: Matrix, mask: int) -> Matrix:
    """Principal submatrix A[I] for the index set given as a bitmask."""
    if mask < 0 or mask >> A.n:
        raise DomainError("index mask %#x out of range for n=%d" % (mask, A.n))
    idx = indices_from_mask(mask)
    rows = [[A.rows[i][j] for j in idx] for i in idx]
    return Matrix(rows, kind=A.kind, real_symmetric=A.real_symmetric,
                  hermitian=A.hermitian)


def direct_sum(A: Matrix, B: Matrix) -> Matrix:
    if A.kind != B.kind:
        raise MixedModeError(
            "direct_sum needs matching kinds, got %s and %s" % (A.kind, B.kind)
        )
    zero = {
        RATIONAL: Fraction(0),
        COMPLEX_RATIONAL: GaussianRational(0),
        FLOAT: 0.0,
        COMPLEX_FLOAT: 0j,
    }[A.kind]
    n, m = A.n, B.n
    rows = []
    for i in range(n):
        rows.append(list(A.rows[i]) + [zero] * m)
    for i in range(m):
        rows.append([zero] * n + list(B.rows[i]))
    return Matrix(rows, kind=A.kind,
                  real_symmetric=A.real_symmetric and B.real_symmetric,
                  hermitian=A.hermitian and B.hermitian)


def doubled(A: Matrix) -> Matrix:
    """The 2n x 2n block matrix [[A, A], [A, A]] of a real symmetric A."""
    if kind_is_complex(A.kind):
        raise DomainError("doubled needs a real matrix, kind is %s" % A.kind)
    if not A.is_symmetric_entrywise():
        raise DomainError("doubled needs a symmetric matrix")
    n = A.n
    rows = []
    for i in range(2 * n):
        src = A.rows[i % n]
        rows.append(list(src) + list(src))
    return Matrix(rows, kind=A.kind, real_symmetric=True, hermitian=True)


# ---------------------------------------------------------------------------
# random instances (all exact; deterministic in their arguments)
# ---------------------------------------------------------------------------

REAL_SYMMETRIC = "real-symmetric"
HERMITIAN = "hermitian"


def _rng(label: str, *parts) -> random.Random:
    # String seeding is stable across runs and platforms, and the label
    # keeps the streams of different generators disjoint.
    return random.Random(":".join([label] + [str(p) for p in parts]))


def _rand_fraction(rng: random.Random, scale: int) -> Fraction:
    return Fraction(rng.randint(-scale, scale), rng.randint(1, scale))


def random_matrix(n: int, kind: str = RATIONAL, scale: int = 4,
                  seed: int = 0) -> Matrix:
    """Random square matrix with entries p/q, |p| <= scale, 1 <= q <= scale."""
    if scale < 1:
        raise DomainError("scale must be >= 1")
    rng = _rng("mat", kind, n, scale, seed)
    if kind == RATIONAL:
        rows = [[_rand_fraction(rng, scale) for _ in range(n)] for _ in range(n)]
    elif kind == COMPLEX_RATIONAL:
        rows = [
            [GaussianRational(_rand_fraction(rng, scale),
                              _rand_fraction(rng, scale))
             for _ in range(n)]
            for _ in range(n)
        ]
    else:
        raise DomainError("random_matrix kind must be exact, got %r" % (kind,))
    return Matrix(rows, kind=kind)


def random_symmetric_matrix(n: int, scale: int = 4, seed: int = 0) -> Matrix:
    """Random real symmetric rational matrix (not necessarily PSD)."""
    if scale < 1:
        raise DomainError("scale must be >= 1")
    rng = _rng("sym", n, scale, seed)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            x = _rand_fraction(rng, scale)
            rows[i][j] = x
            rows[j][i] = x
    return Matrix(rows, kind=RATIONAL, real_symmetric=True, hermitian=True)


def _gram(b_rows, complex_entries: bool) -> Matrix:
    n = len(b_rows)
    rows = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            acc = sum(
                (b_rows[i][k] * conj_scalar(b_rows[j][k])
                 for k in range(len(b_rows[i]))),
                GaussianRational(0) if complex_entries else Fraction(0),
            )
            rows[i][j] = acc
            rows[j][i] = conj_scalar(acc)
    if complex_entries:
        return Matrix(rows, kind=COMPLEX_RATIONAL, hermitian=True)
    return Matrix(rows, kind=RATIONAL, real_symmetric=True, hermitian=True)


def random_psd(n: int, kind: str = REAL_SYMMETRIC, scale: int = 4,
               seed: int = 0) -> Matrix:
    """Random Gram matrix G = B B*, exactly PSD by construction.

    kind is "real-symmetric" (rational G) or "hermitian" (complex-rational G).
    Deterministic in (n, kind, scale, seed).
    """
    if kind not in (REAL_SYMMETRIC, HERMITIAN):
        raise DomainError("random_psd kind must be %r or %r" %
                          (REAL_SYMMETRIC, HERMITIAN))
    if scale < 1:
        raise DomainError("scale must be >= 1")
    rng = _rng("psd", kind, n, scale, seed)
    if kind == REAL_SYMMETRIC:
        b = [[_rand_fraction(rng, scale) for _ in range(n)] for _ in range(n)]
        return _gram(b, complex_entries=False)
    b = [
        [GaussianRational(_rand_fraction(rng, scale), _rand_fraction(rng, scale))
         for _ in range(n)]
        for _ in range(n)
    ]
    return _gram(b, complex_entries=True)


def _rational_unit_vector(rng: random.Random, d: int, scale: int) -> list:
    """An exactly rational point on the unit sphere of R^d.

    Inverse stereographic projection: for u in Q^(d-1),
    x = (2u, 1 - |u|^2) / (1 + |u|^2) has |x| = 1 exactly.
    """
    u = [_rand_fraction(rng, scale) for _ in range(d - 1)]
    s = sum(x * x for x in u)
    den = 1 + s
    return [2 * x / den for x in u] + [(1 - s) / den]


def random_unit_diag_psd(n: int, kind: str = REAL_SYMMETRIC, scale: int = 4,
                         seed: int = 0) -> Matrix:
    """Random exactly PSD matrix with exact unit diagonal.

    Rows of the Gram factor are exactly rational unit vectors, so every
    diagonal entry of G = B B* is exactly 1.
    """
    if kind not in (REAL_SYMMETRIC, HERMITIAN):
        raise DomainError("random_unit_diag_psd kind must be %r or %r" %
                          (REAL_SYMMETRIC, HERMITIAN))
    if scale < 1:
        raise DomainError("scale must be >= 1")
    if n == 0:
        return Matrix([], kind=RATIONAL if kind == REAL_SYMMETRIC
                      else COMPLEX_RATIONAL,
                      real_symmetric=kind == REAL_SYMMETRIC, hermitian=True)
    rng = _rng("unitpsd", kind, n, scale, seed)
    if kind == REAL_SYMMETRIC:
        b = [_rational_unit_vector(rng, n, scale) for _ in range(n)]
        return _gram(b, complex_entries=False)
    b = []
    for _ in range(n):
        x = _rational_unit_vector(rng, 2 * n, scale)
        b.append([GaussianRational(x[2 * k], x[2 * k + 1]) for k in range(n)])
    return _gram(b, complex_entries=True)


def random_diagonal_psd(n: int, scale: int = 4, seed: int = 0) -> Matrix:
    """Random diagonal matrix with nonnegative rational entries."""
    rng = _rng("diagpsd", n, scale, seed)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = Fraction(rng.randint(0, scale), rng.randint(1, scale))
    return Matrix(rows, kind=RATIONAL, real_symmetric=True, hermitian=True)


# ---------------------------------------------------------------------------
# positive semidefiniteness certification
# ---------------------------------------------------------------------------

_EXACT_PSD_MAX_N = 8


def certify_psd(A: Matrix, tol_factor: float = 1e-9) -> bool:
    """Decide positive semidefiniteness.

    Exact kinds with n <= 8: all nonempty principal minors are checked to be
    nonnegative, which is exact and side-effect free. Larger or float
    matrices: diagonally pivoted Cholesky with tolerance tol_factor * trace.
    Raises DomainError if A is not Hermitian entrywise.
    """
    if not A.is_hermitian_entrywise():
        raise DomainError("certify_psd needs a Hermitian matrix")
    if A.n == 0:
        return True
    if kind_is_exact(A.kind) and A.n <= _EXACT_PSD_MAX_N:
        from .kernels import determinant
        from .scalars import exact_real
        for mask in range(1, 1 << A.n):
            if exact_real(determinant(submatrix(A, mask))) < 0:
                return False
        return True
    return _pivoted_cholesky_psd(A.to_numpy(), tol_factor)


def _pivoted_cholesky_psd(a: np.ndarray, tol_factor: float) -> bool:
    a = np.array(a)
    n = a.shape[0]
    trace = float(np.real(np.trace(a)))
    tol = tol_factor * max(trace, 1.0)
    for k in range(n):
        d = np.real(np.diag(a)[k:])
        p = int(np.argmax(d)) + k
        if p != k:
            a[[k, p], :] = a[[p, k], :]
            a[:, [k, p]] = a[:, [p, k]]
        pivot = float(np.real(a[k, k]))
        if pivot <= tol:
            # Remaining block must vanish for a PSD matrix.
            return bool(np.all(np.abs(a[k:, k:]) <= tol * (n + 1)))
        col = a[k + 1:, k] / pivot
        a[k + 1:, k + 1:] -= np.outer(col, np.conj(a[k + 1:, k]))
    return True


# ---------------------------------------------------------------------------
# text I/O
# ---------------------------------------------------------------------------

_FLAG_NAMES = {"real-symmetric": "real_symmetric", "hermitian": "hermitian"}
_FILE_FIELDS = (RATIONAL, COMPLEX_RATIONAL, FLOAT)


def dumps_matrix(A: Matrix) -> str:
    if A.kind not in _FILE_FIELDS:
        raise MatrixFormatError(
            "field %s has no text form; convert first" % A.kind
        )
    out = io.StringIO()
    out.write("n %d\n" % A.n)
    out.write("field %s\n" % A.kind)
    flags = []
    if A.real_symmetric:
        flags.append("real-symmetric")
    if A.hermitian:
        flags.append("hermitian")
    out.write(("flags " + " ".join(flags)).rstrip() + "\n")
    for row in A.rows:
        out.write(" ".join(format_scalar(x) for x in row) + "\n")
    return out.getvalue()


def loads_matrix(text: str) -> Matrix:
    lines = [
        ln.strip() for ln in text.splitlines()
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise MatrixFormatError("empty matrix text")

    def expect(idx, key):
        if idx >= len(lines):
            raise MatrixFormatError("missing %r line" % key)
        parts = lines[idx].split()
        if parts[0] != key:
            raise MatrixFormatError(
                "expected %r line, got %r" % (key, lines[idx])
            )
        return parts[1:]

    n_parts = expect(0, "n")
    if len(n_parts) != 1 or not n_parts[0].isdigit():
        raise MatrixFormatError("bad n line")
    n = int(n_parts[0])
    field_parts = expect(1, "field")
    if len(field_parts) != 1 or field_parts[0] not in _FILE_FIELDS:
        raise MatrixFormatError("bad field line %r" % (lines[1],))
    field = field_parts[0]
    idx = 2
    flag_kwargs = {"real_symmetric": False, "hermitian": False}
    if idx < len(lines) and lines[idx].split()[0] == "flags":
        for name in lines[idx].split()[1:]:
            if name not in _FLAG_NAMES:
                raise MatrixFormatError("unknown flag %r" % (name,))
            flag_kwargs[_FLAG_NAMES[name]] = True
        idx += 1
    rows = []
    for i in range(n):
        if idx + i >= len(lines):
            raise MatrixFormatError("missing row %d of %d" % (i + 1, n))
        tokens = lines[idx + i].split()
        if len(tokens) != n:
            raise MatrixFormatError(
                "row %d has %d entries, expected %d" % (i + 1, len(tokens), n)
            )
        try:
            rows.append([parse_scalar(t, field) for t in tokens])
        except ScalarFormatError as exc:
            raise MatrixFormatError("row %d: %s" % (i + 1, exc)) from exc
    if idx + n != len(lines):
        raise MatrixFormatError("trailing content after %d rows" % n)
    return Matrix(rows, kind=field, **flag_kwargs)


def write_matrix(A: Matrix, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(dumps_matrix(A))


def read_matrix(path) -> Matrix:
    with open(path, "r", encoding="ascii") as fh:
        return loads_matrix(fh.read())


def matrix_digest(A: Matrix) -> str:
    """sha256 of the canonical serialization, for tamper-evident findings."""
    return hashlib.sha256(dumps_matrix(A).encode("ascii")).hexdigest()
