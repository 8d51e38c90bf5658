"""Exact computation with embedded (ribbon) graphs.

Arrow presentations, the twist/partial-dual ribbon group action and its
orbits, medial graphs and cycle family graphs, and the transition, Penrose,
topochromatic, Bollobas-Riordan, Las Vergnas and signed polynomials, all
with exact integer arithmetic and runnable identity verifiers.
"""

from .arrows import (
    ArrowPresentation,
    InvariantRecord,
    RibbonError,
    RibbonSyntaxError,
    boundary_components,
    delete_edge,
    invariants,
    parse,
    parse_signed,
    serialize,
)
from .canonical import (
    canonical_embedded,
    enumerate_graphs,
    equivalent,
    graphs_up_to,
)
from .duality import (
    apply_gamma,
    apply_word,
    contract,
    geometric_dual,
    normal_form,
    orbit,
    partial_dual,
    twist,
)
from .laurent import LaurentPoly
from .medial import (
    all_cycle_family_graphs,
    count_admissible_valuations,
    cycle_family_graph,
    is_checkerboard_colourable,
    medial,
    tait_black,
    tait_white,
)
from .polynomials import (
    bollobas_riordan,
    chromatic,
    las_vergnas,
    penrose,
    signed_topochromatic,
    topochromatic,
    transition_recursive,
    transition_statesum,
)
from .verify import run_all, run_verify, verify_catalog

__version__ = "0.1.0"

__all__ = [
    "ArrowPresentation", "InvariantRecord", "RibbonError", "RibbonSyntaxError",
    "boundary_components", "delete_edge", "invariants", "parse", "parse_signed",
    "serialize", "canonical_embedded", "enumerate_graphs", "equivalent",
    "graphs_up_to", "apply_gamma", "apply_word", "contract", "geometric_dual",
    "normal_form", "orbit", "partial_dual", "twist", "LaurentPoly",
    "all_cycle_family_graphs", "count_admissible_valuations", "cycle_family_graph",
    "is_checkerboard_colourable", "medial", "tait_black", "tait_white",
    "bollobas_riordan", "chromatic", "las_vergnas", "penrose",
    "signed_topochromatic", "topochromatic", "transition_recursive",
    "transition_statesum", "run_all", "run_verify", "verify_catalog",
]
