"""Grigorchuk groups over ultimately periodic parameter sequences, their
orbit Schreier graphs, the associated minimal subshift, and the embedding of
the group into the topological full group of that subshift."""

from .omega import EventuallyConstantOmegaError, OmegaParseError, OmegaSequence, parse_omega
from .group import (
    RHO,
    Ray,
    apply_generator,
    apply_word,
    ball_sizes,
    element_order,
    first_zero_position,
    fixing_generator,
    is_trivial,
    normalize_word,
    orbit_contains,
    root_and_sections,
    words_equal,
)
from .schreier import (
    Block,
    GrayCodeTable,
    LabeledGraph,
    block_graph,
    build_gamma_orbit,
    build_gamma_recursive,
    delta_block,
    export_dot,
    glue,
    gray_code,
    gray_index,
    parse_dot,
    ray_at,
    rho_enumeration,
    ruler_a,
    self_similarity_check,
)
from .subshift import (
    complexity,
    delta_not_eventually_periodic,
    double_language,
    extensions,
    gamma_word,
    is_admissible,
    language,
    morse_hedlund_check,
    occurring_symbols_from,
    render_word,
    uniform_recurrence_radius,
)
from .fullgroup import (
    Cylinder,
    FullGroupElement,
    Window,
    commutator_identity_check,
    compose,
    diagonal_element,
    double_element,
    dump_element,
    element_order_fg,
    elements_equal,
    embed_word,
    find_disjoint_cylinder,
    first_return_element,
    generator_element,
    identity_element,
    injectivity_witness,
    inverse,
    is_identity,
    schreier_consistency,
    schreier_window,
    shift_power,
    swap_involution,
    tau,
)

__version__ = "0.1.0"
