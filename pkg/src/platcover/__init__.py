"""Plat presentations of links and the combinatorics of their branched cyclic coverings."""
from .braid_core import (
    BraidLetter,
    BraidWord,
    EndpointPermutation,
    Permutation,
    append,
    concatenate,
    parse_braid,
    permutation_of,
    preserves_parity_classes,
    prepend,
)
from .covering import (
    BranchData,
    CoveringClassification,
    MonodromyAssignment,
    SurfaceCoveringReport,
    branch_data_from_special_plat,
    bridge_bound,
    classify,
    euler_characteristic,
    genus_bound,
    heegaard_genus,
    is_connected_cover,
    lift_check,
    monodromy_rep,
    p_star,
    round_trip_check,
)
from .errors import (
    BraidParseError,
    PlatcoverError,
    PreconditionError,
    StrandMismatchError,
    VerificationError,
)
from .link_invariants import LinkingMatrix, crossing_sign, linking_matrix
from .plat import (
    ArcRef,
    ComponentPartition,
    Direction,
    MoveRecord,
    OrientedPlat,
    PlatPresentation,
    apply_move,
    components,
    exists_orientation_condition2prime,
    is_condition1,
    is_condition2,
    is_condition2prime,
    is_special,
    orient,
    specialize,
)

__version__ = "0.1.0"
