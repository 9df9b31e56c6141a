"""Exact MV-algebras with internal states: constructions, structure theory,
and a decision procedure for their equations."""

from .constructions import (
    chang_algebra,
    diagonalize,
    finite_chain,
    fixture,
    hyper_algebra,
    product,
    quotient_by_filter,
    quotient_smmv,
    skew_diagonal,
    subalgebra_closure,
    unit_interval,
)
from .decider import check_in_algebra, decide, decide_mv_equation, decide_smmv_equation
from .descriptors import parse_assignment, parse_descriptor, parse_element
from .errors import SMMVError
from .mv import element_in_domain, fmt, mv_derived, mv_leq, mv_neg, mv_oplus
from .states import (
    EXHAUSTIVE,
    SMMVAlgebra,
    Sampled,
    check_state_axioms,
    decompose_element,
    enumerate_idempotent_endos,
    image_and_kernel,
)
from .structure import check_si_characterization, classify_type, is_subdirectly_irreducible, tau_filters_min
from .terms import eval_term, parse_equation, parse_term, registry_get

__version__ = "0.1.0"
