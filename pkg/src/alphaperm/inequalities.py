"""Positivity and block inequalities for PSD matrices, plus a counterexample hunter.

Every check produces ComparisonResult records with exact slacks (float mode
gets a tolerance band instead). The hunter samples random exactly-PSD
instances, evaluates a target family, and never reports a violation unless
per_alpha_naive, an algorithm sharing no code with the fast kernels,
reproduces it; a disagreement between the two kernels raises OracleMismatch
instead of producing a "discovery".

Checked families on a PSD A with unit split A' = A[{0..m-1}], A'' = A[rest]:

    lieb         per(A) >= per(A') per(A'')
    fischer      det(A) <= det(A') det(A'')
    haf-per      haf(doubled(A)) >= per(A)           (A real)
    lieb-alpha   per_a(A) >= per_a(A') per_a(A'')
    neg-nonneg   (-1)^n per_{-a}(A) >= 0
    neg-block    (-1)^n per_{-a}(A) <= ((-1)^m per_{-a}(A'))
                                       ((-1)^(n-m) per_{-a}(A''))
    half-scaled  per_{a/2}(A) >= 2^-n per_a(A)       (A real)
    marcus-upper per_a(A) >= a^n prod a_ii
    marcus-lower a^n prod a_ii >= (-1)^n per_{-a}(A)
    marcus-half  per_{a/2}(A) >= (a/2)^n prod a_ii   (A real)

The alpha-indexed families are proved for alpha a nonnegative integer or
alpha >= n-1 (exactly when binom(alpha, k) >= 0 for all k <= n, see
binomials_nonnegative) and conjectured for 1 <= alpha < n-1 except that
neg-nonneg is genuinely open there; the hunter treats it as sign data, not
as a gate.

Shape averages: for a partition shape of n and sign s in {+1, -1},

    p_s(shape) = average over set partitions with that shape of
                 prod_blocks per_s(A[block])

where per_{+1} is the permanent and per_{-1}(B) = (-1)^{dim B} det(B).
check_majorization_step compares p on shapes related by merging two parts.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import AlphaPermError, DomainError
from .kernels import (
    cycle_sum_table,
    determinant,
    diagonal_product,
    hafnian,
    per_alpha_dp,
    per_alpha_naive,
    permanent,
)
from .matrices import (
    HERMITIAN,
    REAL_SYMMETRIC,
    Matrix,
    doubled,
    dumps_matrix,
    loads_matrix,
    matrix_digest,
    random_psd,
    random_unit_diag_psd,
    split_masks,
    submatrix,
)
from .partitions import enumerate_shape_partitions, shape_partition_count
from .scalars import (
    GaussianRational,
    as_scalar,
    exact_real,
    format_scalar,
    kind_is_exact,
    parse_scalar,
)


class OracleMismatch(AlphaPermError):
    """per_alpha_dp and per_alpha_naive disagreed; a kernel is buggy."""


HOLDS = "holds"
EQUALITY = "equality"
VIOLATED = "violated"


@dataclass(frozen=True)
class ComparisonResult:
    name: str
    lhs: object
    rhs: object
    direction: str          # ">=" or "<="
    slack: object           # lhs-rhs or rhs-lhs so that >= 0 means holds
    verdict: str            # holds / equality / violated
    mode: str               # "exact" or "float"
    tol: float = 0.0
    hypothesis: bool = None  # alpha inside the proven regime, when relevant

    @property
    def ok(self) -> bool:
        return self.verdict != VIOLATED


def _real_value(x, tol):
    """Collapse a (should-be) real scalar to Fraction or float."""
    if isinstance(x, GaussianRational):
        if x.im != 0:
            raise ArithmeticError("imaginary residue %s in a real quantity" % x.im)
        return x.re
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, complex):
        bound = max(tol, 1e-9) * (1.0 + abs(x))
        if abs(x.imag) > bound:
            raise ArithmeticError("imaginary residue %r in a real quantity" % x)
        return x.real
    return float(x)


def compare(name, lhs, rhs, direction=">=", tol=0.0, hypothesis=None) -> ComparisonResult:
    """Build a ComparisonResult; exact inputs get exact verdicts."""
    if direction not in (">=", "<="):
        raise DomainError("direction must be >= or <=")
    lhs = _real_value(lhs, tol)
    rhs = _real_value(rhs, tol)
    slack = lhs - rhs if direction == ">=" else rhs - lhs
    if isinstance(slack, Fraction):
        verdict = EQUALITY if slack == 0 else (HOLDS if slack > 0 else VIOLATED)
        return ComparisonResult(name, lhs, rhs, direction, slack, verdict,
                                "exact", 0.0, hypothesis)
    verdict = (
        EQUALITY if abs(slack) <= tol
        else (HOLDS if slack > tol else VIOLATED)
    )
    return ComparisonResult(name, lhs, rhs, direction, slack, verdict,
                            "float", tol, hypothesis)


def binomials_nonnegative(alpha, n: int) -> bool:
    """True iff binom(alpha, k) >= 0 for every 0 <= k <= n.

    Holds exactly when alpha is a nonnegative integer or alpha >= n - 1,
    the hypothesis of the proven block inequalities.
    """
    alpha = as_scalar(alpha)
    if isinstance(alpha, GaussianRational):
        if alpha.im != 0:
            return False
        alpha = alpha.re
    if isinstance(alpha, Fraction):
        return (alpha.denominator == 1 and alpha >= 0) or alpha >= n - 1
    if isinstance(alpha, float):
        return (alpha >= 0 and alpha == math.floor(alpha)) or alpha >= n - 1
    raise DomainError("alpha must be real, got %r" % (alpha,))


def _real_alpha(alpha):
    alpha = as_scalar(alpha)
    if isinstance(alpha, GaussianRational):
        if alpha.im != 0:
            raise DomainError("inequalities need a real alpha")
        return alpha.re
    return alpha


# ---------------------------------------------------------------------------
# base inequalities (alpha-free)
# ---------------------------------------------------------------------------

def check_lieb(A: Matrix, m: int, tol=0.0) -> ComparisonResult:
    low, high = split_masks(A.n, m)
    lhs = permanent(A)
    rhs = permanent(submatrix(A, low)) * permanent(submatrix(A, high))
    return compare("lieb", lhs, rhs, ">=", tol)


def check_fischer(A: Matrix, m: int, tol=0.0) -> ComparisonResult:
    low, high = split_masks(A.n, m)
    lhs = determinant(A)
    rhs = determinant(submatrix(A, low)) * determinant(submatrix(A, high))
    return compare("fischer", lhs, rhs, "<=", tol)


def check_haf_per(A: Matrix, tol=0.0) -> ComparisonResult:
    lhs = hafnian(doubled(A))
    rhs = permanent(A)
    return compare("haf-per", lhs, rhs, ">=", tol)


# ---------------------------------------------------------------------------
# alpha-indexed families
# ---------------------------------------------------------------------------

def _is_real_kind(A: Matrix) -> bool:
    return A.kind in ("rational", "float")


def check_lieb_type(A: Matrix, m: int, alpha, tol=0.0) -> list:
    """The three block families at a given alpha and split; four results
    on real matrices (half-scaled needs real entries)."""
    alpha = _real_alpha(alpha)
    n = A.n
    hyp = binomials_nonnegative(alpha, n)
    low, high = split_masks(n, m)
    Ap, App = submatrix(A, low), submatrix(A, high)
    table = cycle_sum_table(A) if kind_is_exact(A.kind) else None
    per_a = per_alpha_dp(A, alpha, cycle_table=table)
    per_na = per_alpha_dp(A, -alpha, cycle_table=table)
    sign_n = -1 if n % 2 else 1
    sign_m = -1 if m % 2 else 1
    sign_nm = -1 if (n - m) % 2 else 1
    out = [
        compare("lieb-alpha", per_a,
                per_alpha_dp(Ap, alpha) * per_alpha_dp(App, alpha),
                ">=", tol, hyp),
        compare("neg-nonneg", sign_n * per_na, 0, ">=", tol, hyp),
        compare("neg-block", sign_n * per_na,
                (sign_m * per_alpha_dp(Ap, -alpha))
                * (sign_nm * per_alpha_dp(App, -alpha)),
                "<=", tol, hyp),
    ]
    if _is_real_kind(A):
        half = per_alpha_dp(A, alpha / 2, cycle_table=table)
        scaled = per_a * (Fraction(1, 2 ** n) if kind_is_exact(A.kind)
                          else 0.5 ** n)
        out.append(compare("half-scaled", half, scaled, ">=", tol, hyp))
    return out


def check_neg_positivity(A: Matrix, alpha, tol=0.0) -> ComparisonResult:
    """(-1)^n per_{-alpha}(A) >= 0 on the full matrix, no split."""
    alpha = _real_alpha(alpha)
    n = A.n
    hyp = binomials_nonnegative(alpha, n)
    sign_n = -1 if n % 2 else 1
    return compare("neg-nonneg", sign_n * per_alpha_dp(A, -alpha), 0,
                   ">=", tol, hyp)


def check_marcus(A: Matrix, alpha, tol=0.0) -> list:
    """Diagonal chain per_a(A) >= a^n prod a_ii >= (-1)^n per_{-a}(A),
    plus the half-strength lower bound on real matrices."""
    alpha = _real_alpha(alpha)
    n = A.n
    hyp = binomials_nonnegative(alpha, n)
    # the chain is also proven for every alpha >= 1 when n <= 5
    hyp_chain = hyp or (alpha >= 1 and n <= 5)
    table = cycle_sum_table(A) if kind_is_exact(A.kind) else None
    diag = diagonal_product(A)
    mid = alpha ** n * diag
    per_a = per_alpha_dp(A, alpha, cycle_table=table)
    per_na = per_alpha_dp(A, -alpha, cycle_table=table)
    sign_n = -1 if n % 2 else 1
    out = [
        compare("marcus-upper", per_a, mid, ">=", tol, hyp_chain),
        compare("marcus-lower", mid, sign_n * per_na, ">=", tol, hyp_chain),
    ]
    if _is_real_kind(A):
        half = per_alpha_dp(A, alpha / 2, cycle_table=table)
        out.append(compare("marcus-half", half, (alpha / 2) ** n * diag,
                           ">=", tol, hyp))
    return out


# ---------------------------------------------------------------------------
# shape averages and majorization steps
# ---------------------------------------------------------------------------

def p_shape(A: Matrix, shape, sign: int, tol=0.0):
    """Average over set partitions with the given shape of the product of
    per_{sign} over blocks (sign +1: permanents; sign -1: signed dets)."""
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    n = A.n
    count = shape_partition_count(n, shape)
    total = None
    for part in enumerate_shape_partitions(n, shape):
        prod = None
        for mask in part.blocks:
            B = submatrix(A, mask)
            if sign == 1:
                v = permanent(B)
            else:
                v = determinant(B)
                if B.n % 2:
                    v = -v
            prod = v if prod is None else prod * v
        total = prod if total is None else total + prod
    return _real_value(total, tol) / count


def _merge_of(lam, mu):
    """Check that lam arises from mu by merging exactly two parts."""
    from collections import Counter
    cl, cm = Counter(lam), Counter(mu)
    gained = cl - cm
    lost = cm - cl
    if sum(lost.values()) != 2 or sum(gained.values()) != 1:
        return False
    parts = []
    for v, c in lost.items():
        parts.extend([v] * c)
    (merged,) = [v for v, c in gained.items() for _ in range(c)]
    return merged == parts[0] + parts[1]


def check_majorization_step(A: Matrix, lam, mu, sign: int, tol=0.0) -> ComparisonResult:
    """Compare p(lam) against p(mu) when lam merges two parts of mu.

    Permanent averages go up under merging; signed determinant averages
    satisfy the reversed unsigned inequality, so the signed direction is
    >= when (-1)^n = +... concretely: >= for sign +1, and for sign -1 it is
    >= at odd n and <= at even n.
    """
    lam = tuple(sorted(lam, reverse=True))
    mu = tuple(sorted(mu, reverse=True))
    if not _merge_of(lam, mu):
        raise DomainError("%r is not a two-part merge of %r" % (lam, mu))
    n = A.n
    if sum(lam) != n:
        raise DomainError("shapes must partition %d" % n)
    direction = ">=" if (sign == 1 or n % 2 == 1) else "<="
    label = "per" if sign == 1 else "det"
    name = "majorization-%s-%s-%s" % (
        label,
        ".".join(str(x) for x in lam),
        ".".join(str(x) for x in mu),
    )
    return compare(name, p_shape(A, lam, sign, tol), p_shape(A, mu, sign, tol),
                   direction, tol)


def merge_pairs(n: int) -> list:
    """All (lam, mu) with mu a shape of n and lam a two-part merge of mu."""
    shapes = set()

    def gen(remaining, maxpart, acc):
        if remaining == 0:
            shapes.add(tuple(acc))
            return
        for p in range(min(remaining, maxpart), 0, -1):
            gen(remaining - p, p, acc + [p])

    gen(n, n, [])
    pairs = []
    for mu in sorted(shapes, reverse=True):
        seen = set()
        for i in range(len(mu)):
            for j in range(i + 1, len(mu)):
                lam = tuple(
                    sorted(
                        [mu[a] for a in range(len(mu)) if a not in (i, j)]
                        + [mu[i] + mu[j]],
                        reverse=True,
                    )
                )
                if lam not in seen:
                    seen.add(lam)
                    pairs.append((lam, mu))
    return pairs


# ---------------------------------------------------------------------------
# findings
# ---------------------------------------------------------------------------

_RECORDS = ("violation", "sign", "min-slack")


@dataclass(frozen=True)
class Finding:
    """One hunter observation, self-contained enough to replay."""
    name: str
    record: str
    matrix: str
    sha256: str
    alpha: str
    split: int
    slack: str
    seed: int
    trial: int
    timestamp: str = None  # left None so outputs stay byte-identical

    def to_json(self) -> str:
        return json.dumps(
            {
                "name": self.name,
                "record": self.record,
                "matrix": self.matrix,
                "sha256": self.sha256,
                "alpha": self.alpha,
                "split": self.split,
                "slack": self.slack,
                "seed": self.seed,
                "trial": self.trial,
                "timestamp": self.timestamp,
            },
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, line: str) -> "Finding":
        return cls(**json.loads(line))


def evaluate_comparison(name: str, A: Matrix, alpha, split) -> ComparisonResult:
    """Recompute a named comparison with the fast kernels."""
    if name == "lieb":
        return check_lieb(A, split)
    if name == "fischer":
        return check_fischer(A, split)
    if name == "haf-per":
        return check_haf_per(A)
    if name in ("lieb-alpha", "neg-block", "half-scaled"):
        for r in check_lieb_type(A, split, alpha):
            if r.name == name:
                return r
        raise DomainError("comparison %r not produced for this matrix" % name)
    if name == "neg-nonneg":
        if split is None:
            return check_neg_positivity(A, alpha)
        for r in check_lieb_type(A, split, alpha):
            if r.name == name:
                return r
    if name.startswith("marcus-"):
        for r in check_marcus(A, alpha):
            if r.name == name:
                return r
        raise DomainError("comparison %r not produced for this matrix" % name)
    raise DomainError("unknown comparison %r" % name)


def replay_finding(finding: Finding):
    """Recompute a finding's slack from its own serialized instance."""
    A = loads_matrix(finding.matrix)
    alpha = (parse_scalar(finding.alpha, "rational")
             if finding.alpha is not None else None)
    result = evaluate_comparison(finding.name, A, alpha, finding.split)
    return result.slack


def _naive_slack(name: str, A: Matrix, alpha, split):
    """Recompute a comparison's slack with per_alpha_naive only."""
    n = A.n
    sign_n = -1 if n % 2 else 1

    def per1(B):
        return exact_real(per_alpha_naive(B, 1))

    def det(B):
        s = -1 if B.n % 2 else 1
        return s * exact_real(per_alpha_naive(B, -1))

    def pa(B, a):
        return exact_real(per_alpha_naive(B, a))

    if name in ("lieb", "fischer", "lieb-alpha", "neg-block"):
        low, high = split_masks(n, split)
        Ap, App = submatrix(A, low), submatrix(A, high)
    if name == "lieb":
        return per1(A) - per1(Ap) * per1(App)
    if name == "fischer":
        return det(Ap) * det(App) - det(A)
    if name == "haf-per":
        haf = Fraction(2 ** n) * pa(A, Fraction(1, 2))
        return haf - per1(A)
    if name == "lieb-alpha":
        return pa(A, alpha) - pa(Ap, alpha) * pa(App, alpha)
    if name == "neg-nonneg":
        return sign_n * pa(A, -alpha)
    if name == "neg-block":
        sm = -1 if split % 2 else 1
        snm = -1 if (n - split) % 2 else 1
        lhs = sign_n * pa(A, -alpha)
        rhs = (sm * pa(Ap, -alpha)) * (snm * pa(App, -alpha))
        return rhs - lhs
    if name == "half-scaled":
        return pa(A, alpha / 2) - pa(A, alpha) * Fraction(1, 2 ** n)
    diag = exact_real(diagonal_product(A))
    if name == "marcus-upper":
        return pa(A, alpha) - alpha ** n * diag
    if name == "marcus-lower":
        return alpha ** n * diag - sign_n * pa(A, -alpha)
    if name == "marcus-half":
        return pa(A, alpha / 2) - (alpha / 2) ** n * diag
    raise DomainError("unknown comparison %r" % name)


# ---------------------------------------------------------------------------
# hunter
# ---------------------------------------------------------------------------

HUNT_TARGETS = ("marcus", "lieb", "fischer", "haf-per", "lieb-type",
                "neg-positivity")


@dataclass(frozen=True)
class HuntConfig:
    targets: tuple = ("marcus",)
    n: int = 5
    trials: int = 1000
    seed: int = 0
    kind: str = REAL_SYMMETRIC
    scale: int = 3
    unit_diagonal: bool = True
    alpha_fixed: str = None     # scalar text, overrides the range
    alpha_lo: str = "1"
    alpha_hi: str = "2"
    alpha_max_den: int = 16
    keep_smallest: int = 0
    jobs: int = 1

    def validate(self):
        for t in self.targets:
            if t not in HUNT_TARGETS:
                raise DomainError("unknown hunt target %r" % (t,))
        if self.n < 1:
            raise DomainError("hunt needs n >= 1")
        if self.trials < 1:
            raise DomainError("hunt needs trials >= 1")
        if self.kind not in (REAL_SYMMETRIC, HERMITIAN):
            raise DomainError("hunt kind must be %r or %r"
                              % (REAL_SYMMETRIC, HERMITIAN))
        if self.kind == HERMITIAN:
            for t in self.targets:
                if t == "haf-per":
                    raise DomainError("haf-per needs real matrices")
        if self.alpha_max_den < 1:
            raise DomainError("alpha_max_den must be >= 1")


@dataclass
class HuntResult:
    config: HuntConfig
    trials: int
    findings: list
    violations: int
    observations: int
    min_slack: object          # Fraction or None
    min_name: str = None
    min_split: int = None
    min_trial: int = None
    min_alpha: str = None
    min_matrix: Matrix = None


def _trial_matrix(cfg: HuntConfig, t: int) -> Matrix:
    seed = cfg.seed ^ t
    if cfg.unit_diagonal:
        return random_unit_diag_psd(cfg.n, cfg.kind, cfg.scale, seed)
    return random_psd(cfg.n, cfg.kind, cfg.scale, seed)


def _trial_alpha(cfg: HuntConfig, t: int) -> Fraction:
    if cfg.alpha_fixed is not None:
        return Fraction(cfg.alpha_fixed)
    lo, hi = Fraction(cfg.alpha_lo), Fraction(cfg.alpha_hi)
    if t % 64 == 0:
        return lo
    if t % 64 == 1:
        return hi
    rng = random.Random("alpha:%d" % (cfg.seed ^ t))
    den = rng.randint(1, cfg.alpha_max_den)
    return lo + (hi - lo) * Fraction(rng.randint(0, den), den)


def _needs_alpha(target: str) -> bool:
    return target in ("marcus", "lieb-type", "neg-positivity")


def _trial_comparisons(cfg: HuntConfig, A: Matrix, alpha):
    """Yield (comparison, split, gated) triples for all configured targets."""
    n = A.n
    for target in cfg.targets:
        if target == "marcus":
            for r in check_marcus(A, alpha):
                yield r, None, True
        elif target == "lieb":
            for m in range(1, n):
                yield check_lieb(A, m), m, True
        elif target == "fischer":
            for m in range(1, n):
                yield check_fischer(A, m), m, True
        elif target == "haf-per":
            yield check_haf_per(A), None, True
        elif target == "lieb-type":
            for m in range(1, n):
                for r in check_lieb_type(A, m, alpha):
                    gated = not (r.name == "neg-nonneg" and not r.hypothesis)
                    yield r, m, gated
        elif target == "neg-positivity":
            r = check_neg_positivity(A, alpha)
            yield r, None, False


def _hunt_chunk(cfg: HuntConfig, lo: int, hi: int) -> list:
    """Evaluate trials lo..hi-1; return compact, picklable per-trial records."""
    records = []
    for t in range(lo, hi):
        A = _trial_matrix(cfg, t)
        alpha = _trial_alpha(cfg, t) if any(
            _needs_alpha(x) for x in cfg.targets) else None
        violations = []
        signs = []
        min_gated = None
        for result, split, gated in _trial_comparisons(cfg, A, alpha):
            if gated:
                if result.verdict == VIOLATED:
                    naive = _naive_slack(result.name, A, alpha, split)
                    if naive != result.slack:
                        raise OracleMismatch(
                            "%s at trial %d: dp slack %s, naive slack %s"
                            % (result.name, t, result.slack, naive)
                        )
                    violations.append((result.name, split,
                                       format_scalar(result.slack)))
                key = (result.slack, result.name, split)
                if min_gated is None or key[0] < min_gated[0]:
                    min_gated = key
            else:
                if result.slack < 0:
                    signs.append((result.name, split,
                                  format_scalar(result.slack)))
        records.append((
            t,
            format_scalar(alpha) if alpha is not None else None,
            violations,
            signs,
            (format_scalar(min_gated[0]), min_gated[1], min_gated[2])
            if min_gated is not None else None,
        ))
    return records


def hunt(cfg: HuntConfig) -> HuntResult:
    """Run the hunter; deterministic in cfg, independent of cfg.jobs."""
    cfg.validate()
    chunks = []
    if cfg.jobs <= 1:
        chunks.append(_hunt_chunk(cfg, 0, cfg.trials))
    else:
        from concurrent.futures import ProcessPoolExecutor
        step = -(-cfg.trials // cfg.jobs)
        ranges = [
            (lo, min(lo + step, cfg.trials))
            for lo in range(0, cfg.trials, step)
        ]
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            futures = [pool.submit(_hunt_chunk, cfg, lo, hi)
                       for lo, hi in ranges]
            chunks = [f.result() for f in futures]

    findings = []
    min_key = None   # (slack, trial, name, split, alpha_text)
    per_trial_min = []
    violations = observations = 0
    for records in chunks:
        for t, alpha_text, viol, signs, min_gated in records:
            for name, split, slack_text in viol:
                A = _trial_matrix(cfg, t)
                findings.append(Finding(
                    name=name, record="violation", matrix=dumps_matrix(A),
                    sha256=matrix_digest(A), alpha=alpha_text, split=split,
                    slack=slack_text, seed=cfg.seed, trial=t,
                ))
                violations += 1
            for name, split, slack_text in signs:
                A = _trial_matrix(cfg, t)
                findings.append(Finding(
                    name=name, record="sign", matrix=dumps_matrix(A),
                    sha256=matrix_digest(A), alpha=alpha_text, split=split,
                    slack=slack_text, seed=cfg.seed, trial=t,
                ))
                observations += 1
            if min_gated is not None:
                slack = Fraction(min_gated[0])
                per_trial_min.append((slack, t, min_gated[1], min_gated[2],
                                      alpha_text))
                if min_key is None or slack < min_key[0]:
                    min_key = (slack, t, min_gated[1], min_gated[2],
                               alpha_text)

    if cfg.keep_smallest > 0 and per_trial_min:
        for slack, t, name, split, alpha_text in sorted(
                per_trial_min)[:cfg.keep_smallest]:
            A = _trial_matrix(cfg, t)
            findings.append(Finding(
                name=name, record="min-slack", matrix=dumps_matrix(A),
                sha256=matrix_digest(A), alpha=alpha_text, split=split,
                slack=format_scalar(slack), seed=cfg.seed, trial=t,
            ))

    result = HuntResult(
        config=cfg, trials=cfg.trials, findings=findings,
        violations=violations, observations=observations,
        min_slack=min_key[0] if min_key else None,
    )
    if min_key:
        result.min_trial = min_key[1]
        result.min_name = min_key[2]
        result.min_split = min_key[3]
        result.min_alpha = min_key[4]
        result.min_matrix = _trial_matrix(cfg, min_key[1])
    return result
