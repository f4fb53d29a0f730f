"""Batch identity and inequality suites behind the check subcommand.

Both suites are deterministic functions of (n_max, trials, seed, ...) and
split cleanly across worker processes: each trial is evaluated from its
index alone, so results are byte-identical whatever the job count.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .inequalities import (
    VIOLATED,
    Finding,
    check_fischer,
    check_haf_per,
    check_lieb,
    check_lieb_type,
    check_majorization_step,
    check_marcus,
    merge_pairs,
    _naive_slack,
    OracleMismatch,
)
from .kernels import (
    determinant,
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
    matrix_digest,
    random_matrix,
    random_psd,
    random_symmetric_matrix,
    random_unit_diag_psd,
)
from .partitions import (
    bell_number,
    enumerate_partitions,
    half_formula_rhs,
    per_beta_k,
    product_formula_rhs,
    stirling2,
    sum_formula_rhs,
)
from .scalars import exact_real, format_scalar, to_float_scalar
import random as _random


@dataclass
class CheckOutcome:
    name: str
    passed: int = 0
    total: int = 0
    min_slack: object = None     # (slack, trial) or None
    findings: list = field(default_factory=list)

    def absorb(self, ok: bool):
        self.total += 1
        if ok:
            self.passed += 1

    def see_slack(self, slack, trial: int):
        if self.min_slack is None or slack < self.min_slack[0]:
            self.min_slack = (slack, trial)


def _alpha_rng(seed: int, label: str, t: int) -> _random.Random:
    return _random.Random("%s:%d:%d" % (label, seed, t))


def _random_alpha(rng: _random.Random, lo=-2, hi=2, max_den=16) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def alpha_set_for(set_name: str, n: int, seed: int, t: int) -> list:
    """The alpha values a trial exercises, ascending and duplicate-free."""
    if set_name == "theorem2":
        values = {Fraction(0), Fraction(1), Fraction(2), Fraction(3),
                  Fraction(n - 1), Fraction(n - 1) + Fraction(1, 2),
                  Fraction(n)}
    elif set_name == "unit":
        rng = _alpha_rng(seed, "unit-alpha", t)
        values = {Fraction(1), Fraction(2),
                  1 + (_random_alpha(rng, 0, 1)) % 1,
                  1 + (_random_alpha(rng, 0, 1)) % 1}
    else:
        raise DomainError("unknown alpha set %r" % (set_name,))
    return sorted(values)


# ---------------------------------------------------------------------------
# identity suite
# ---------------------------------------------------------------------------

IDENTITY_CHECKS = (
    "per-dp-vs-naive",
    "per-at-1-vs-permanent",
    "per-at-neg1-vs-det",
    "wick-half-haf",
    "sum-formula",
    "product-formula",
    "half-formula",
    "partition-counts",
)


def _close(a, b, tol: float) -> bool:
    return abs(a - b) <= tol * (1.0 + max(abs(a), abs(b)))


def _exact_eq(a, b, tol, float_mode: bool) -> bool:
    if not float_mode:
        return a == b
    if isinstance(a, complex) or isinstance(b, complex):
        return _close(complex(a), complex(b), tol)
    return _close(a, b, tol)


def _identity_trial(n_max: int, seed: int, t: int, float_mode: bool,
                    tol: float) -> list:
    """Evaluate every identity check once; return (name, ok) pairs."""
    out = []

    def prep(A, alpha):
        if float_mode:
            return A.to_float(), to_float_scalar(alpha)
        return A, alpha

    # dp against the permutation oracle, alternating scalar fields
    n = t % (min(n_max, 6) + 1)
    kind = "complex-rational" if t % 3 == 2 else "rational"
    A = random_matrix(n, kind, scale=3, seed=seed ^ t) if n else Matrix(
        [], kind=kind)
    alpha = _random_alpha(_alpha_rng(seed, "id-alpha", t))
    Af, af = prep(A, alpha)
    out.append(("per-dp-vs-naive",
                _exact_eq(per_alpha_dp(Af, af), per_alpha_naive(Af, af),
                          tol, float_mode)))

    # specializations at alpha = 1 and alpha = -1
    n = 1 + t % min(n_max, 7)
    B = random_matrix(n, "rational", scale=3, seed=(seed ^ t) + 1)
    Bf, one = prep(B, Fraction(1))
    out.append(("per-at-1-vs-permanent",
                _exact_eq(per_alpha_dp(Bf, one), permanent(Bf), tol,
                          float_mode)))
    sign = -1 if n % 2 else 1
    Bf, neg = prep(B, Fraction(-1))
    out.append(("per-at-neg1-vs-det",
                _exact_eq(per_alpha_dp(Bf, neg), sign * determinant(Bf),
                          tol, float_mode)))

    # per_{1/2} against the hafnian of the doubled matrix
    n = t % (min(n_max, 6) + 1)
    S = random_symmetric_matrix(n, scale=3, seed=seed ^ t)
    Sf, half = prep(S, Fraction(1, 2))
    lhs = per_alpha_dp(Sf, half)
    haf = hafnian(doubled(Sf))
    scale = Fraction(1, 2 ** n) if not float_mode else 0.5 ** n
    out.append(("wick-half-haf", _exact_eq(lhs, scale * haf, tol, float_mode)))

    # sum formula with m = 2 or 3 parts
    n = 1 + t % min(n_max, 4)
    m = 2 + t % 2
    C = random_matrix(n, "rational", scale=3, seed=(seed ^ t) + 2)
    rng = _alpha_rng(seed, "sum-beta", t)
    betas = [_random_alpha(rng) for _ in range(m)]
    total = sum(betas, Fraction(0))
    Cf, tot = prep(C, total)
    bf = [to_float_scalar(b) for b in betas] if float_mode else betas
    out.append(("sum-formula",
                _exact_eq(per_alpha_dp(Cf, tot), sum_formula_rhs(Cf, bf),
                          tol, float_mode)))

    # product formula, forcing beta = 1 and beta = -1 regularly
    n = 1 + t % min(n_max, 5)
    D = random_matrix(n, "rational", scale=3, seed=(seed ^ t) + 3)
    rng = _alpha_rng(seed, "prod-ab", t)
    alpha = _random_alpha(rng)
    beta = (Fraction(1), Fraction(-1), _random_alpha(rng))[t % 3]
    Df, _ = prep(D, alpha)
    af = to_float_scalar(alpha) if float_mode else alpha
    bf = to_float_scalar(beta) if float_mode else beta
    out.append(("product-formula",
                _exact_eq(per_alpha_dp(Df, af * bf),
                          product_formula_rhs(Df, af, bf), tol, float_mode)))

    # half formula on a symmetric instance
    n = 1 + t % min(n_max, 5)
    E = random_symmetric_matrix(n, scale=3, seed=(seed ^ t) + 4)
    alpha = _random_alpha(_alpha_rng(seed, "half-alpha", t))
    Ef, af = prep(E, alpha)
    out.append(("half-formula",
                _exact_eq(per_alpha_dp(Ef, af / 2), half_formula_rhs(Ef, af),
                          tol, float_mode)))

    # enumeration counts against the closed recurrences
    n = 1 + t % 8
    parts = list(enumerate_partitions(n))
    ok = len(parts) == bell_number(n)
    for k in range(1, n + 1):
        ok = ok and sum(1 for p in parts if p.k == k) == stirling2(n, k)
    out.append(("partition-counts", ok))
    return out


# ---------------------------------------------------------------------------
# inequality suite
# ---------------------------------------------------------------------------

INEQUALITY_CHECKS = (
    "lieb",
    "fischer",
    "haf-per",
    "lieb-alpha",
    "neg-nonneg",
    "neg-block",
    "half-scaled",
    "marcus-upper",
    "marcus-lower",
    "marcus-half",
    "block-lift",
    "majorization-per",
    "majorization-det",
)


def _diag_of(A: Matrix) -> Matrix:
    from .scalars import zero_like
    zero = zero_like(A.rows[0][0])
    rows = [
        [A.rows[i][i] if i == j else zero for j in range(A.n)]
        for i in range(A.n)
    ]
    return Matrix(rows, kind=A.kind, real_symmetric=A.real_symmetric,
                  hermitian=A.hermitian)


def _trial_psd(n_max: int, seed: int, t: int) -> Matrix:
    """The PSD instance of inequality trial t; n, field, and unit-diagonal
    choice cycle with coprime periods so every combination occurs."""
    n_top = max(2, min(n_max, 5))
    n = 2 + t % (n_top - 1) if n_top > 2 else 2
    kind = HERMITIAN if t % 3 == 2 else REAL_SYMMETRIC
    unit = t % 2 == 0
    if unit:
        return random_unit_diag_psd(n, kind, 3, seed ^ t)
    return random_psd(n, kind, 3, seed ^ t)


def _inequality_trial(n_max: int, seed: int, t: int, alpha_set: str,
                      float_mode: bool, tol: float) -> list:
    """Evaluate the inequality checks on one PSD instance.

    Returns (check_name, ok, slack_or_None, violation_record_or_None) rows.
    """
    A = _trial_psd(n_max, seed, t)
    n = A.n
    A_eval = A.to_float() if float_mode else A
    is_real = A.kind == "rational"
    rows = []

    def record(check_name, result, alpha, split, gated=True):
        if not gated:
            # outside the proven regime the verdict is conjecture evidence,
            # not a check; the hunter is the tool for collecting it
            return
        ok = result.verdict != VIOLATED
        viol = None
        if result.verdict == VIOLATED and not float_mode:
            naive = _naive_slack(result.name, A, alpha, split)
            if naive != result.slack:
                raise OracleMismatch(
                    "%s at trial %d: dp %s vs naive %s"
                    % (result.name, t, result.slack, naive)
                )
            viol = (result.name, split,
                    format_scalar(alpha) if alpha is not None else None,
                    format_scalar(result.slack))
        rows.append((check_name, ok, result.slack, viol))

    for m in range(1, n):
        record("lieb", check_lieb(A_eval, m, tol), None, m)
        record("fischer", check_fischer(A_eval, m, tol), None, m)
    if is_real:
        record("haf-per", check_haf_per(A_eval, tol), None, None)

    alphas = alpha_set_for(alpha_set, n, seed, t)
    for alpha in alphas:
        a_eval = to_float_scalar(alpha) if float_mode else alpha
        for m in range(1, n):
            for r in check_lieb_type(A_eval, m, a_eval, tol):
                record(r.name, r, alpha, m, r.hypothesis is not False)
        for r in check_marcus(A_eval, a_eval, tol):
            record(r.name, r, alpha, None, r.hypothesis is not False)

    # lifted block sums against the diagonal, small sizes only
    if n <= 4 and not float_mode:
        D = _diag_of(A)
        sign = -1 if n % 2 else 1
        ok = True
        worst = None
        for k in range(1, n + 1):
            per_lift = (per_beta_k(A, Fraction(1), k)
                        - per_beta_k(D, Fraction(1), k))
            det_lift = sign * (per_beta_k(D, Fraction(-1), k)
                               - per_beta_k(A, Fraction(-1), k))
            for s in (exact_real(per_lift), exact_real(det_lift)):
                ok = ok and s >= 0
                worst = s if worst is None else min(worst, s)
        rows.append(("block-lift", ok, worst, None))

    if n == 5 and is_real and not float_mode:
        for lam, mu in merge_pairs(5):
            for sign_ in (1, -1):
                r = check_majorization_step(A, lam, mu, sign_, tol)
                name = "majorization-per" if sign_ == 1 else "majorization-det"
                rows.append((name, r.verdict != VIOLATED, r.slack, None))
    return rows


# ---------------------------------------------------------------------------
# drivers
# ---------------------------------------------------------------------------

def _identity_chunk(args):
    n_max, seed, lo, hi, float_mode, tol = args
    return [
        (t, _identity_trial(n_max, seed, t, float_mode, tol))
        for t in range(lo, hi)
    ]


def _inequality_chunk(args):
    n_max, seed, lo, hi, alpha_set, float_mode, tol = args
    return [
        (t, _inequality_trial(n_max, seed, t, alpha_set, float_mode, tol))
        for t in range(lo, hi)
    ]


def _run_chunked(worker, arg_builder, trials: int, jobs: int) -> list:
    if jobs <= 1:
        return worker(arg_builder(0, trials))
    from concurrent.futures import ProcessPoolExecutor
    step = -(-trials // jobs)
    ranges = [(lo, min(lo + step, trials)) for lo in range(0, trials, step)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(worker, arg_builder(lo, hi))
                   for lo, hi in ranges]
        merged = []
        for f in futures:
            merged.extend(f.result())
    return merged


def run_identity_suite(n_max: int = 5, trials: int = 25, seed: int = 0,
                       jobs: int = 1, float_mode: bool = False,
                       tol: float = 1e-9) -> list:
    outcomes = {name: CheckOutcome(name) for name in IDENTITY_CHECKS}
    rows = _run_chunked(
        _identity_chunk,
        lambda lo, hi: (n_max, seed, lo, hi, float_mode, tol),
        trials, jobs,
    )
    for _t, pairs in rows:
        for name, ok in pairs:
            outcomes[name].absorb(ok)
    return [outcomes[name] for name in IDENTITY_CHECKS]


def run_inequality_suite(n_max: int = 5, trials: int = 25, seed: int = 0,
                         alpha_set: str = "theorem2", jobs: int = 1,
                         float_mode: bool = False, tol: float = 1e-9) -> list:
    outcomes = {name: CheckOutcome(name) for name in INEQUALITY_CHECKS}
    rows = _run_chunked(
        _inequality_chunk,
        lambda lo, hi: (n_max, seed, lo, hi, alpha_set, float_mode, tol),
        trials, jobs,
    )
    for t, entries in rows:
        for name, ok, slack, viol in entries:
            oc = outcomes[name]
            oc.absorb(ok)
            if slack is not None:
                oc.see_slack(slack, t)
            if viol is not None:
                cmp_name, split, alpha_text, slack_text = viol
                A = _trial_psd(n_max, seed, t)
                oc.findings.append(Finding(
                    name=cmp_name, record="violation",
                    matrix=dumps_matrix(A), sha256=matrix_digest(A),
                    alpha=alpha_text, split=split, slack=slack_text,
                    seed=seed, trial=t,
                ))
    return [outcomes[name] for name in INEQUALITY_CHECKS]
