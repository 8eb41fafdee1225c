"""Exact Littlewood-Richardson coefficients by hives, Steinberg's formula and tableaux,
and certification of their stretched polynomials."""
from .core import (
    Partition,
    Permutation,
    all_permutations,
    make_partition,
    parse_partition,
    partitions_of,
    permute,
    scale_partition,
    staircase,
)
from .errors import (
    DuplicateAbscissa,
    LengthMismatch,
    LRError,
    MonotonicityViolation,
    NegativePart,
    NonzeroSum,
    ResourceLimit,
    UnbalancedRay,
    WeightMismatch,
)
from .hive import build_boundary, count_integer_hives, enumerate_integer_hives, rhombus_constraints
from .kostant import (
    check_total_unimodularity,
    kostant,
    kostant_brute_force,
    kostant_nonzero,
    positive_roots,
    simple_root_matrix,
)
from .poly import ExactPolynomial, interpolate
from .steinberg import build_ray, classify_ray, find_stability_threshold, steinberg_lr
from .stretch import certify_polynomiality, lr_coefficient, sample_stretched
from .tableaux import lr_coefficient_tableaux

__version__ = "0.1.0"
