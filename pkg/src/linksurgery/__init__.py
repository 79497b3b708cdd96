"""Alexander polynomials, Seiberg-Witten basic-class counts and surgery
quotients for families of curves in fibered link complements."""

from .alexander import (
    AlexanderResult,
    alexander_burau,
    alexander_from_braid,
    alexander_with_axis,
    cable_alexander,
    nonzero_term_count,
    torres_prediction,
    torres_specialize,
    torus_knot_alexander,
)
from .braid import (
    BraidWord,
    ClosureInfo,
    borromean_block_braid,
    cable_family_descriptor,
    cable_with_core,
    clasp,
    closure_info,
    torus_braid,
)
from .fox import FreeWord, GroupPresentation, alexander_matrix, artin_action, closure_presentation
from .laurent import (
    LaurentPoly,
    NotDivisibleError,
    det,
    equal_up_to_units,
    exact_div,
    normalize_symmetric,
    substitute,
)
from .quotients import (
    BudgetExceeded,
    FiniteGroupTable,
    abelianization_invariants,
    distinguish_family,
    hom_count,
    surgery_quotient,
)
from .surgery import (
    LinkSurgeryDescriptor,
    TorusClass,
    borromean_family_member,
    classes_equal,
    slope,
    torus_class,
)
from .swcount import basic_class_count, beta_sweep, sw_polynomial

__version__ = "0.1.0"
