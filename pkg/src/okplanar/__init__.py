"""Treewidth and balanced separators of outer k-planar graphs from convex drawings."""

from .analysis import AnalysisReport, analyze
from .decomposition import (
    TreeDecomposition,
    build_tree_decomposition,
    split_at_unpierced_links,
    validate_td,
    weak_dual,
)
from .drawing import (
    ConvexDrawing,
    CrossingProfile,
    Link,
    augment_outer_cycle,
    crossing_profile,
    intertwined,
    piercing_edges,
)
from .errors import (
    BoundViolationError,
    CertificateError,
    InvalidInputError,
    OKPlanarError,
    OracleCapError,
)
from .generators import (
    StackedPrismSpec,
    random_outer_k_planar,
    random_outer_min_k_planar,
    stacked_prism,
)
from .kernels import BACKEND
from .oracles import (
    OracleResult,
    brute_convex_lcr,
    brute_min_balanced_separation,
    brute_treewidth,
)
from .separation import Separation, build_separation, centroid_triangle, validate_separation
from .triangulation import (
    SplitRecord,
    Triangulation,
    piercing_stats,
    triangulate,
    triangulate_min,
    triangulate_o2p,
    triangulate_strong,
    triangulate_weak,
)

__version__ = "0.1.0"
