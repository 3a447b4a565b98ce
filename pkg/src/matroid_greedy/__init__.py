"""Greedy minimization of increasing set functions over matroid bases.

Provides forward and reverse greedy with full traces, exhaustive
submodularity-ratio and curvature analysis, matroid oracles (uniform,
partition, graphic, explicit, dual, truncation), closed-form performance
bounds with brute-force verification, instance generation/persistence, and a
CLI (`matroid-greedy`).
"""

from .errors import (
    GroundSetTooLargeError,
    InfeasibleError,
    InfeasibleInstanceError,
    InvalidSpecError,
    MatroidGreedyError,
    NonMonotoneError,
    NotStrictlyIncreasingError,
    SchemaError,
    TraceMismatchError,
    WitnessFailureError,
)
from .greedy import (
    GreedyStep,
    GreedyTrace,
    OptimumRecord,
    OrderingWitness,
    Rejection,
    brute_force_optimum,
    forward_greedy,
    ordering_witness,
    reverse_greedy,
    reverse_greedy_as_forward,
)
from .guarantees import (
    DEFAULT_TOLERANCE,
    RatioReport,
    RegionCell,
    RegionGrid,
    VerificationRecord,
    analyze_ratios,
    bian_bound,
    forward_bound,
    forward_greedy_ratios,
    guo_bound,
    region_compare,
    reverse_bound,
    reverse_greedy_ratios,
    strong_curvature,
    verify_forward,
    verify_reverse,
)
from .instances import (
    Instance,
    canonical_sp2,
    canonical_t3,
    gen_bounded_marginal,
    gen_explicit_random,
    gen_modular,
    instance_from_json,
    instance_to_json,
    load_instance,
    random_suite,
    save_instance,
)
from .matroids import (
    AxiomReport,
    DualSpec,
    ExplicitSpec,
    GraphicSpec,
    Matroid,
    PartitionSpec,
    TruncateSpec,
    UniformSpec,
    build_matroid,
    check_axioms,
)
from .setfunc import (
    MarginalBounds,
    MonotonicityReport,
    RatioScan,
    SetFunction,
    check_monotone,
    complement_function,
    cumulative_submodularity_ratio,
    curvature,
    marginal_bounds_estimate,
    ratio_scan,
    submodularity_ratio,
)
from .subsets import elements, full_mask, mask_of, submasks

__version__ = "0.1.0"
