"""Exact alpha-permanents, hafnians, and permanental inequality checking."""

from .errors import (
    AlphaPermError,
    CapacityError,
    DomainError,
    MatrixFormatError,
    MixedModeError,
    ScalarFormatError,
)
from .inequalities import (
    ComparisonResult,
    Finding,
    HuntConfig,
    HuntResult,
    OracleMismatch,
    binomials_nonnegative,
    check_fischer,
    check_haf_per,
    check_lieb,
    check_lieb_type,
    check_majorization_step,
    check_marcus,
    check_neg_positivity,
    compare,
    evaluate_comparison,
    hunt,
    merge_pairs,
    p_shape,
    replay_finding,
)
from .kernels import (
    alpha_determinant,
    cycle_sum,
    cycle_sum_table,
    determinant,
    hafnian,
    per_alpha_dp,
    per_alpha_naive,
    permanent,
    require_alpha_kind,
)
from .matrices import (
    HERMITIAN,
    REAL_SYMMETRIC,
    Matrix,
    certify_psd,
    direct_sum,
    doubled,
    dumps_matrix,
    loads_matrix,
    matrix_digest,
    random_matrix,
    random_psd,
    random_symmetric_matrix,
    random_unit_diag_psd,
    read_matrix,
    submatrix,
    write_matrix,
)
from .partitions import (
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
from .scalars import (
    GaussianRational,
    format_scalar,
    gen_binomial,
    parse_scalar,
    scalar_kind,
)
from .suites import run_identity_suite, run_inequality_suite

__version__ = "0.1.0"

__all__ = [
    "AlphaPermError",
    "CapacityError",
    "ComparisonResult",
    "DomainError",
    "Finding",
    "GaussianRational",
    "HERMITIAN",
    "HuntConfig",
    "HuntResult",
    "Matrix",
    "MatrixFormatError",
    "MixedModeError",
    "OracleMismatch",
    "REAL_SYMMETRIC",
    "ScalarFormatError",
    "SetPartition",
    "alpha_determinant",
    "bell_number",
    "binomials_nonnegative",
    "certify_psd",
    "check_fischer",
    "check_haf_per",
    "check_lieb",
    "check_lieb_type",
    "check_majorization_step",
    "check_marcus",
    "check_neg_positivity",
    "compare",
    "cycle_sum",
    "cycle_sum_table",
    "determinant",
    "direct_sum",
    "doubled",
    "dumps_matrix",
    "enumerate_partitions",
    "enumerate_shape_partitions",
    "evaluate_comparison",
    "format_scalar",
    "gen_binomial",
    "hafnian",
    "half_formula_rhs",
    "hunt",
    "loads_matrix",
    "matrix_digest",
    "merge_pairs",
    "p_shape",
    "parse_scalar",
    "per_alpha_dp",
    "per_alpha_naive",
    "per_beta_k",
    "permanent",
    "product_formula_rhs",
    "random_matrix",
    "random_psd",
    "random_symmetric_matrix",
    "random_unit_diag_psd",
    "read_matrix",
    "replay_finding",
    "require_alpha_kind",
    "run_identity_suite",
    "run_inequality_suite",
    "scalar_kind",
    "shape_partition_count",
    "stirling2",
    "submatrix",
    "sum_formula_rhs",
    "write_matrix",
    "__version__",
]
