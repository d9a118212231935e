"""Exact hook-length statistics over integer partitions."""

from .closed_forms import (
    central_factorial,
    divisor_data,
    expand_power_in_q_basis,
    lemma1_value,
    okada_rhs,
    phi_ej_corrected,
    phi_ej_paper,
    phi_pk_closed,
)
from .hook_statistics import (
    INCONCLUSIVE,
    Elementary,
    PowerSum,
    PowerSumVector,
    QProduct,
    RationalPolynomial,
    detect_degree,
    eval_statistic,
    interpolate,
    okada_lhs,
    phi,
    r_poly_value,
)
from .partitions import (
    Cell,
    Partition,
    conjugate,
    enumerate_partitions,
    hook_length,
    hook_lengths,
    syt_count,
    syt_count_oracle,
)

__version__ = "0.1.0"
