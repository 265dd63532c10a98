"""Diagonal-dominance classes and H-eigenvalue inclusion intervals for real tensors."""
from .classify import (
    Check,
    ClassificationReport,
    PdCertificate,
    Witness,
    certify_positive_definite,
    classify_all,
    is_double_b,
    is_double_b_bar,
    is_dsdd,
    is_qdsdd,
    is_quasi_double_b,
    is_quasi_double_b_bar,
)
from .heig import HEigenpair, heig_exact_n2, sshopm, verify_containment
from .inclusion import (
    brauer_real,
    double_b_bar_set,
    gerschgorin,
    quasi_double_b_bar_set,
    upsilon,
)
from .intervals import Interval, IntervalSet, solve_abs_affine_product
from .tensor import (
    PairProfile,
    RowProfile,
    Tensor,
    apply_power,
    hadamard_power,
    identity_tensor,
    is_symmetric,
    is_z_tensor,
    pair_profile,
    plus_transform,
    poly_value,
    principal_subtensor,
    row_profile,
    row_tensor,
    scale_rows_by_signs,
    sign_normalize,
)

__version__ = "0.1.0"
