"""filicheck: exact-arithmetic analysis of invariant and bi-invariant
complex structures on finite-dimensional real and complex Lie algebras."""

from .algebra import (
    BilinearMap,
    InvalidAlgebraError,
    LieAlgebra,
    ValidationReport,
    adjoint,
    bracket,
    bracket_span,
    change_basis,
    direct_sum,
    is_ideal,
    is_subalgebra,
    subalgebra_constants,
    validate,
)
from .catalog import CATALOG_KEYS, CatalogEntry, builtin, builtin_algebra
from .cohomology import (
    PreconditionError,
    coboundary1,
    corollary2_scan,
    transported_law,
    verify_coboundary_identity,
)
from .complexify import (
    check_ideal_decomposition,
    check_subalgebra_decomposition,
    complexify,
    eigenspace_split,
    sigma,
    sigma_subspace,
    z2_grading_check,
)
from .fileformat import AlgebraFormatError, BracketConflictError, dump, load, parse, serialize
from .linalg import Matrix, Subspace
from .nilpotent import (
    NonNilpotentError,
    characteristic_sequence,
    find_characteristic_vector,
    is_characteristic_vector,
    is_filiform,
    is_nilpotent,
    jordan_profile,
    lower_central_series,
    pairing_pattern_holds,
)
from .numeric import numeric_invariant_search
from .scalars import Scalar
from .structures import (
    CertificateKind,
    ContradictionError,
    Status,
    Verdict,
    bi_invariant_pairing_obstruction,
    commutant,
    filiform_obstruction,
    filiform_split_check,
    is_bi_invariant_cs,
    is_invariant_cs,
    nijenhuis_residual,
    solve_bi_invariant,
)

__version__ = "0.1.0"
