"""Combinatorial and line-bundle calculus for Lagrangian Grassmannian bases."""

from .basis import (
    Decomposition,
    GeometryReport,
    Kind,
    MapLabel,
    RecursionReport,
    Summand,
    Theory,
    WittTable,
    atom_multiset,
    gw_basis,
    k_basis,
    verify_geometry,
    verify_recursions,
    witt_table,
)
from .diagrams import (
    Boundary,
    ClassSets,
    DiagramClass,
    Orientation,
    RowType,
    ShiftedDiagram,
    boundary,
    class_sets,
    classify,
    delete_right_column,
    delete_top_row,
    enumerate_diagrams,
    weight,
)
from .errors import DescriptorError, DomainError, LagflagError, UnsupportedError
from .flags import (
    FlagDescriptor,
    SchemeReport,
    Violation,
    component_count,
    is_gorenstein,
    is_regular,
    is_valid,
    named_scheme,
    relative_dimension,
    scheme_report,
    validate,
)
from .marking import (
    MarkedPoint,
    MarkedSelection,
    SelectionRule,
    TupleData,
    lf_a,
    lf_b,
    lf_descriptor_type0,
    lf_descriptor_type1,
    lf_ktheory,
    marked_points,
    selection_S,
    selection_S_tilde,
    tuples,
)
from .picard import (
    AMBIENT_DELTA,
    E1,
    E2,
    Affine,
    AlignmentResult,
    ConnectingCase,
    Generator,
    ParityClass,
    PicElement,
    SYMBOLIC_N,
    Twist,
    TwistVariant,
    affine,
    blowup_pullback,
    canonical_exponents,
    canonical_sheaf,
    canonical_sheaf_in_n,
    classify_connecting,
    delta,
    det_v,
    lambda_pair,
    mod2_reduce,
    nabla,
    relative_canonical_over_LG,
    twist_alignment,
    wedge_pushforward_rank,
)

__version__ = "0.1.0"
