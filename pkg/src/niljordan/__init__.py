"""niljordan: exact arithmetic for nilpotent Jordan algebras.

Structure constants over the Gaussian rationals, isomorphism invariants,
classification in dimension <= 4, symbolic contraction limits along Puiseux
families, polynomial deformations and the degeneration graph.
"""

from .atlas import (
    AtlasEntry,
    associative_registry,
    canonical_tensor,
    load_atlas,
    squaring_map,
)
from .classify import (
    CLASS_IDS,
    NormalForm31,
    characteristic_basis,
    classify,
    classify_real,
    normal_form_31,
    verify_isomorphism,
)
from .contractions import (
    ContractionEdge,
    ContractionFamily,
    contraction_obstruction,
    limit_of_family,
    scaling_family,
    search_witness,
    verify_edge,
)
from .deformations import (
    DeformationReport,
    search_deformation_direction,
    verify_polynomial_deformation,
)
from .errors import (
    DIVERGES,
    NOT_FOUND,
    NOT_NILPOTENT,
    DimensionMismatchError,
    NilJordanError,
    NoCharBasisError,
    NotAssociativeError,
    NotJordanError,
    NotNilpotentError,
    ParseError,
    SingularMatrixError,
    UnsupportedDimensionError,
)
from .graphs import (
    DegenerationGraph,
    FamilySpec,
    build_graph,
    parse_dot_edges,
    rigidity_screen,
    to_dot,
)
from .invariants import (
    InvariantProfile,
    center,
    central_series,
    central_series_dims,
    char_sequence,
    coboundary_space_dim,
    derivation_dim,
    nilindex,
    orbit_dim,
    profile,
)
from .mpoly import MPoly
from .paperchecks import run_verification
from .polymatrix import PolyMatrix
from .scalars import (
    I,
    ONE,
    ZERO,
    PuiseuxFraction,
    PuiseuxPoly,
    Scalar,
    parse_scalar,
    puiseux_limit_at_zero,
)
from .tensors import (
    StructureTensor,
    basis_vector,
    is_associative,
    is_jordan,
    jordan_defect,
    mult_operator,
    product,
    transform,
    vector,
)
from .textio import (
    parse_algebra,
    parse_direction,
    parse_family,
    serialize_algebra,
    serialize_direction,
    serialize_family,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
