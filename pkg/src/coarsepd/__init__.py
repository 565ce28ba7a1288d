"""Persistence-diagram metrics and coarse-geometry constructions."""

from .diagram import (
    DELTA,
    AugmentedPair,
    Diagram,
    augment,
    canonicalize,
    delta,
    is_delta,
    persistence,
)
from .errors import (
    CoarsePDError,
    DegenerateDiameter,
    EmptySpace,
    InvalidExponent,
    InvalidPoint,
    MetricValidationError,
    NonpositiveSeparation,
    OutOfCube,
    OversizeForOracle,
    SizeMismatch,
    TooLarge,
)
from .metrics import (
    Matching,
    bottleneck,
    bottleneck_1pt,
    bottleneck_bruteforce,
    check_coarse_equiv_bounds,
    describe_matching,
    wasserstein,
    wasserstein_bruteforce,
)
from .embeddings import (
    BlockedSpace,
    CrossSeparation,
    FiniteMetricSpace,
    UnionEmbedding,
    coarse_disjoint_union,
    dranishnikov_S,
    embed_coarse_union,
    embed_cube_point,
    embed_finite_metric,
    validate_metric,
    zkm_space,
)
from .cover import (
    CoverLabel,
    CoverReport,
    CubeDemoReport,
    brick_classify,
    broken_interval_classify,
    diagram_point_sampler,
    interval_classify,
    line_sampler,
    lower_bound_demo,
    verify_cover,
)
from .profile import CoarseProfile, check_isometry, image_distance_matrix, profile_map

__version__ = "0.1.0"

__all__ = [
    "DELTA",
    "AugmentedPair",
    "Diagram",
    "augment",
    "canonicalize",
    "delta",
    "is_delta",
    "persistence",
    "Matching",
    "bottleneck",
    "bottleneck_1pt",
    "bottleneck_bruteforce",
    "check_coarse_equiv_bounds",
    "describe_matching",
    "wasserstein",
    "wasserstein_bruteforce",
    "BlockedSpace",
    "CrossSeparation",
    "FiniteMetricSpace",
    "UnionEmbedding",
    "coarse_disjoint_union",
    "dranishnikov_S",
    "embed_coarse_union",
    "embed_cube_point",
    "embed_finite_metric",
    "validate_metric",
    "zkm_space",
    "CoverLabel",
    "CoverReport",
    "CubeDemoReport",
    "brick_classify",
    "broken_interval_classify",
    "diagram_point_sampler",
    "interval_classify",
    "line_sampler",
    "lower_bound_demo",
    "verify_cover",
    "CoarseProfile",
    "check_isometry",
    "image_distance_matrix",
    "profile_map",
    "CoarsePDError",
    "DegenerateDiameter",
    "EmptySpace",
    "InvalidExponent",
    "InvalidPoint",
    "MetricValidationError",
    "NonpositiveSeparation",
    "OutOfCube",
    "OversizeForOracle",
    "SizeMismatch",
    "TooLarge",
]
