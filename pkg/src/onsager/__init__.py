"""Exact computations in the Onsager Lie algebra inside the three-point
sl2 loop algebra: four distinguished bases, their bracket tables, recursions,
decompositions and transition formulas, all over rational arithmetic."""

from .ring import (
    INV_T,
    INV_TM1,
    ONE,
    Poly,
    RingElem,
    T,
    TM1,
    T_DPRIME,
    T_PRIME,
    ZERO,
    poly_from_shift,
    ring_aut,
    ring_from_json,
    ring_from_str,
    ring_subset,
    ring_to_json,
    ring_to_str,
    shift_coords,
)
from .loop import (
    L_ZERO,
    LoopElem,
    ONSAGER_A,
    ONSAGER_B,
    bracket,
    dolan_grady_holds,
    in_onsager,
    loop_from_json,
    loop_to_json,
    loop_to_str,
    std_gen,
)
from .symmetry import (
    ALL_PERMS,
    GEN_PERMS,
    IDENTITY,
    MU,
    PHI,
    Perm,
    RHO,
    TAU,
    apply_basic,
    apply_perm,
    word_for,
)
from .likeness import (
    PathParts,
    decompose_canonical,
    decompose_onsager,
    is_like,
    like_basis_elem,
)
from .bases import (
    BasisId,
    BasisVector,
    FAMILIES,
    OCoords,
    RecursionTable,
    basis_elem,
    basis_elem_recursive,
    basis_seeds,
    bracket_coords,
    coords,
)
from .transitions import aut_image, transition
from .expressions import (
    Bracket,
    Expr,
    ExprParseError,
    GEN_A,
    GEN_B,
    Gen,
    Neg,
    Scale,
    Sum,
    evaluate,
    expr_equal,
    expr_from_json,
    expr_to_json,
    parse,
    render,
)
from .verify import CheckResult, SUITES, WORKED_EXAMPLES, run_checks

__version__ = "0.1.0"
