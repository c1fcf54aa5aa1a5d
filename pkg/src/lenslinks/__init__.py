"""Exact computations for algebraic links in lens spaces.

The package turns the combinatorics of links in L(p,q) into exact,
machine-checkable arithmetic: braid words and their closures, lifts of
band diagrams to the 3-sphere, homology classes and component counts,
invariance classes of polynomials under the cyclic action, Alexander
polynomials via the reduced Burau representation, Seifert genus of
quotient knots, and Puiseux cable pairs of plane curve branches.
"""

from .braid import (
    BraidWord,
    StrandPermutation,
    closure_components,
    concat,
    exponent_sum,
    free_reduce,
    garside,
    parse_braid_word,
    permutation,
    power,
)
from .curves import (
    CableSequence,
    PuiseuxData,
    SupportPoly,
    invariance_class,
    is_torus_knot_lift,
    parse_poly,
    puiseux_pairs,
    substitute_powers,
    torus_lift_class,
    torus_poly,
)
from .errors import ParseError
from .genus import (
    FiberData,
    bennequin_fiber,
    fiber_multiplicity,
    quotient_genus,
    torus_quotient_genus,
)
from .invariants import (
    AlexanderPoly,
    alexander_of_closure,
    burau_reduced,
    equal_up_to_unit,
    torus_braid,
)
from .laurent import DivisibilityError, LaurentMatrix, LaurentPoly, divide_exact
from .lens import (
    BandDiagram,
    ConsistencyError,
    HomologyClass,
    LensSpace,
    components,
    homology_classes,
    lift,
    lifted_component_count,
    nullhomologous_orientation,
    parse_band_diagram,
)

__version__ = "0.1.0"

__all__ = [
    "AlexanderPoly",
    "BandDiagram",
    "BraidWord",
    "CableSequence",
    "ConsistencyError",
    "DivisibilityError",
    "FiberData",
    "HomologyClass",
    "LaurentMatrix",
    "LaurentPoly",
    "LensSpace",
    "ParseError",
    "PuiseuxData",
    "StrandPermutation",
    "SupportPoly",
    "alexander_of_closure",
    "bennequin_fiber",
    "burau_reduced",
    "closure_components",
    "components",
    "concat",
    "divide_exact",
    "equal_up_to_unit",
    "exponent_sum",
    "fiber_multiplicity",
    "free_reduce",
    "garside",
    "homology_classes",
    "invariance_class",
    "is_torus_knot_lift",
    "lift",
    "lifted_component_count",
    "nullhomologous_orientation",
    "parse_band_diagram",
    "parse_braid_word",
    "parse_poly",
    "permutation",
    "power",
    "puiseux_pairs",
    "quotient_genus",
    "substitute_powers",
    "torus_braid",
    "torus_lift_class",
    "torus_poly",
    "torus_quotient_genus",
]
