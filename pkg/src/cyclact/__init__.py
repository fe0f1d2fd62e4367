"""Exact arithmetic for hyperbolic forms over cyclic group rings.

The layers, bottom to top: integer lattices (`intlattice`), the group
ring Z[Z/m] with its involution and norm machinery (`groupring`),
based hyperbolic quadratic modules (`forms`), the Lagrangian-complement
solver (`complement`), mod-2 cohomology bookkeeping (`spectral`), and
the census of free cyclic symmetries (`census`).
"""

from .census import (
    ActionQuery,
    CensusReport,
    c_of_n,
    classification,
    existence_check,
)
from .complement import (
    Branch,
    EmbeddingSpec,
    SolverTrace,
    SweepReport,
    rank2_vector_isometry,
    run_sweep,
    sample_spec,
    solve,
    solve_even_m,
    solve_even_n,
    solve_odd_m,
)
from .errors import (
    AugmentationObstruction,
    BadIndex,
    CyclactError,
    Degenerate,
    DimensionMismatch,
    ModulusMismatch,
    NormalizationFailed,
    NotComplement,
    NotDivisible,
    OddModulus,
    OutOfTable,
    ParityObstruction,
    PreconditionFailed,
    SearchExhausted,
    ZeroVector,
)
from .forms import (
    ComplementCertificate,
    QuadraticModule,
    RingMatrix,
    RingVector,
    is_primitive,
    isometry_check,
    lambda_eval,
    mu_eval,
    ring_det,
    transvection,
    verify_lagrangian_complement,
)
from .groupring import (
    DivisionResult,
    FormParameterKind,
    GroupRingElement,
    NormData,
    ParameterClass,
    UnitCheck,
    augmentation,
    exact_divide,
    ideal_contains_one,
    ideal_normalize,
    involution,
    is_unit,
    param_reduce,
    ring_mul,
)
from .intlattice import ZLattice, det_int, row_hnf_transform, xgcd
from .selftest import RunSummary, run_selftest
from .spectral import (
    CohomologyClass,
    RingCase,
    SpectralPage,
    SpinLineReport,
    cohomology_basis,
    d2_rank,
    e2_page,
    spin_line_report,
    steenrod_square,
)

__version__ = "0.1.0"

__all__ = [
    "ActionQuery",
    "AugmentationObstruction",
    "BadIndex",
    "Branch",
    "CensusReport",
    "CohomologyClass",
    "ComplementCertificate",
    "CyclactError",
    "Degenerate",
    "DimensionMismatch",
    "DivisionResult",
    "EmbeddingSpec",
    "FormParameterKind",
    "GroupRingElement",
    "ModulusMismatch",
    "NormData",
    "NormalizationFailed",
    "NotComplement",
    "NotDivisible",
    "OddModulus",
    "OutOfTable",
    "ParameterClass",
    "ParityObstruction",
    "PreconditionFailed",
    "QuadraticModule",
    "RingCase",
    "RingMatrix",
    "RingVector",
    "RunSummary",
    "SearchExhausted",
    "SolverTrace",
    "SpectralPage",
    "SpinLineReport",
    "SweepReport",
    "UnitCheck",
    "ZLattice",
    "ZeroVector",
    "augmentation",
    "c_of_n",
    "classification",
    "cohomology_basis",
    "d2_rank",
    "det_int",
    "e2_page",
    "exact_divide",
    "existence_check",
    "ideal_contains_one",
    "ideal_normalize",
    "involution",
    "is_primitive",
    "is_unit",
    "isometry_check",
    "lambda_eval",
    "mu_eval",
    "param_reduce",
    "rank2_vector_isometry",
    "ring_det",
    "ring_mul",
    "row_hnf_transform",
    "run_selftest",
    "run_sweep",
    "sample_spec",
    "solve",
    "solve_even_m",
    "solve_even_n",
    "solve_odd_m",
    "spin_line_report",
    "steenrod_square",
    "transvection",
    "verify_lagrangian_complement",
    "xgcd",
]
