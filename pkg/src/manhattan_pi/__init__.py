"""Digital circles on Z^2 under the Manhattan metric, and pi from their corners."""

from .analysis import (
    AngleProfile,
    PartialSums,
    a_n_decomposition_check,
    angle_at,
    angle_profile,
    arcsin_series_partial,
    closed_form_S,
    partial_sums,
)
from .generators import (
    Algorithm,
    CostMode,
    FullCirclePath,
    GenericDigitalPath,
    InvalidPathError,
    InvalidRadiusError,
    QuarterPath,
    SmallRadiusWarning,
    expand_full,
    generate_quarter,
    generate_reference,
    is_valid_path,
    segment_distances,
    sign_step,
)
from .lattice import ArithmeticRangeError, LatticePoint, Metric, l1_distance, l2_distance_squared
from .pi_stats import (
    ConvergenceTable,
    MeanReport,
    PiSequence,
    arithmetic_mean_pi,
    convergence_table,
    harmonic_mean_pi,
    identity_residual,
    mean_report,
    pi_sequence,
    reciprocal_mean,
)

__version__ = "0.1.0"
