"""Constrained colored token swapping toolkit."""
from .errors import (
    CctsError,
    IllegalSwapError,
    NotStarError,
    ParseError,
    StateLimitError,
)
from .generators import (
    FIXTURE_NAMES,
    cycle_instance,
    grid_instance,
    ncl_fixture,
    star_random_instance,
    t0_instance,
    teaser_instance,
)
from .jsonio import (
    instance_from_dict,
    instance_to_dict,
    parse_instance,
    parse_solution,
    serialize_instance,
    serialize_solution,
)
from .model import (
    BaseGraph,
    ComponentInstance,
    Decomposition,
    Instance,
    SwapGraph,
    ValidationReport,
    apply_sequence,
    apply_swap,
    color_counts,
    decompose_by_swap_components,
    legal_swaps,
    validate,
)
from .ncl import (
    AND,
    HEAVY,
    LIGHT,
    OR,
    NclGraph,
    NclInstance,
    conservation_quantity,
    flip,
    in_weights,
    is_valid_config,
    legal_flips,
    ncl_from_dict,
    ncl_to_dict,
    parse_ncl,
    serialize_ncl,
    solve_ncl_bfs,
    validate_ncl,
)
from .oracle import (
    DEFAULT_MAX_STATES,
    LIMIT_EXCEEDED,
    SOLVABLE,
    UNSOLVABLE,
    SearchOutcome,
    outcome_to_dict,
    reachable_configs,
    serialize_outcome,
    solvable_symmetric_check,
    solve_bfs,
    verify_sequence,
)
from .reduction import (
    GadgetLayout,
    ReductionOutput,
    decode_orientation,
    encode_orientation,
    flip_script,
    pad_to_cubic,
    reduce,
    serialize_layout,
)
from .star import (
    Verdict,
    decide,
    decide_cycle,
    decide_transitive,
    equivalence_classes,
    normalize_blanks,
    recenter,
    serialize_verdict,
    star_center,
    verdict_to_dict,
)

__all__ = [name for name in dir() if not name.startswith("_")]
