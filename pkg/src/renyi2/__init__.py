"""Order-2 Renyi mutual information of a free massless scalar field.

Two independent computational routes are provided: a capacitance-multipole
scattering formula evaluated in one higher dimension (disks, half-spaces)
and a worldline Monte Carlo estimator over closed polymer loops, plus a CLI
front end and an acceptance-test runner.
"""

__version__ = "0.1.0"

from .disk_multipole import (
    BoundaryCondition,
    CapacitanceMatrix,
    DiskPairGeometry,
    SweepPoint,
    TranslationMatrix,
    capacitance_disk,
    multipole_indices,
    reflection_operator,
    renyi2_large_separation,
    renyi2_two_disks,
    renyi2_two_disks_asymptotic,
    renyi2_two_disks_parts,
    separation_sweep,
    translation_matrix,
)
from .errors import (
    InsufficientStatisticsError,
    NonConvergentError,
    QuadratureNotConvergedError,
)
from .halfspace import (
    DiskHalfSpaceGeometry,
    DiskHalfSpaceResult,
    HalfSpacePairGeometry,
    QuadratureSpec,
    disk_capacitance_monopole,
    disk_halfspace,
    first_reflection_halfspaces,
    halfspace_coefficient,
    kernel_C,
    second_reflection_halfspaces,
)
from .specfun import (
    MultipoleIndex,
    h_fn,
    h_fn_deriv,
    j_fn,
    j_fn_deriv,
    sph_harm,
    wigner3j,
)
from .worldline import (
    Disk,
    HalfPlane,
    InequalityReport,
    MCEstimate,
    MutualEstimate,
    PlanarRegion,
    SamplingPlan,
    TripartiteEstimate,
    Union,
    WorldlineLoop,
    estimate_mutual,
    estimate_tripartite,
    inequality_suite,
    intersection_counts,
    sample_unit_loops,
)

__all__ = [
    "__version__",
    "BoundaryCondition",
    "CapacitanceMatrix",
    "DiskPairGeometry",
    "SweepPoint",
    "TranslationMatrix",
    "capacitance_disk",
    "multipole_indices",
    "reflection_operator",
    "renyi2_large_separation",
    "renyi2_two_disks",
    "renyi2_two_disks_asymptotic",
    "renyi2_two_disks_parts",
    "separation_sweep",
    "translation_matrix",
    "InsufficientStatisticsError",
    "NonConvergentError",
    "QuadratureNotConvergedError",
    "DiskHalfSpaceGeometry",
    "DiskHalfSpaceResult",
    "HalfSpacePairGeometry",
    "QuadratureSpec",
    "disk_capacitance_monopole",
    "disk_halfspace",
    "first_reflection_halfspaces",
    "halfspace_coefficient",
    "kernel_C",
    "second_reflection_halfspaces",
    "MultipoleIndex",
    "h_fn",
    "h_fn_deriv",
    "j_fn",
    "j_fn_deriv",
    "sph_harm",
    "wigner3j",
    "Disk",
    "HalfPlane",
    "InequalityReport",
    "MCEstimate",
    "MutualEstimate",
    "PlanarRegion",
    "SamplingPlan",
    "TripartiteEstimate",
    "Union",
    "WorldlineLoop",
    "estimate_mutual",
    "estimate_tripartite",
    "inequality_suite",
    "intersection_counts",
    "sample_unit_loops",
]
