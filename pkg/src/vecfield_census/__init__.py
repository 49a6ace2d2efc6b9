"""Exact enumeration and classification of bracketing configurations.

Five-symbol bracketing strings, board diagrams with a rotation action, and
generalized plane trees are three faces of the same family of objects; this
package implements the bijections between them, exact counting in closed
form and by recursion, and a brute-force oracle that cross-validates every
formula at desk scale.
"""

from .bracketing import (
    BracketSymbol,
    Pair,
    PairingTable,
    PairKind,
    count_quasi,
    count_valid,
    enumerate_valid,
    is_quasi_valid,
    is_valid,
    match_pairs,
    parse_string,
    symbol_sort_key,
)
from .diagram import BoardDiagram, EdgeKind
from .errors import (
    CapExceeded,
    CensusError,
    NegativeResult,
    NoEdgeAtVertexOrBeyond,
    NotADivisor,
    NotDivisible,
    NotValid,
    OddLength,
    UnknownCharacter,
)
from .formulas import (
    P_PLUS_GROWTH_LIMIT,
    SIGMA_GROWTH_LIMIT,
    a_coeff,
    c_closed,
    catalan,
    edge_face_term,
    euler_phi,
    growth_estimates,
    h_seq,
    p_nk,
    p_plus,
    p_total,
    q_closed,
    sigma_generic,
    vertex_face_term,
)
from .oracle import (
    VerificationReport,
    burnside_orbit_count,
    decomposition_check,
    fix_count,
    generic_orbit_count,
    list_orbit_representatives,
    pnk_histogram,
    run_suite,
)
from .trees import Edge, GeneralizedTree, HalfEdge, PlaneVertex, TreeStats

__version__ = "0.1.0"
