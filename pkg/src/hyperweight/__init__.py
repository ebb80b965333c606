"""hyperweight: exact list total weightings of hypergraphs.

Given a hypergraph (every edge has at least two vertices), two candidate
weights per vertex, and three per edge, this package finds a total
weighting whose induced vertex totals separate the two order-first vertices
of every edge (hence no edge is monochromatic). It also builds
permanent-based certificates for why such weightings exist, audits every
algebraic step of the underlying inductive construction, and cross-checks
three independent coefficient-extraction routes for the pair polynomial.
"""

from .hypergraph import (
    EdgePair,
    Hypergraph,
    ValidationReport,
    Violation,
    delete_first_vertex,
    edge_pair,
    edge_pairs,
    find_twins,
    has_duplicate_pairs,
    validate,
)
from .generate import (
    LIST_MODES,
    enumerate_hypergraphs,
    make_list_assignment,
    random_hypergraph,
)
from .weighting import (
    ListAssignment,
    ListFormatError,
    TotalWeighting,
    VerifyReport,
    check_lists,
    total_weights,
    verify,
)
from .reduction import (
    ReductionLog,
    ReductionRecord,
    ReplayError,
    reduce_duplicate_pairs,
    replay_reduction,
)
from .matrices import IntMatrix
from .permanent import permanent, permanent_naive, permanent_ryser
from .rationals import Rational, format_rational, parse_rational
from .coeffmatrix import (
    CoeffMatrix,
    ColumnMultiset,
    MonomialIndex,
    assemble,
    b_valid_monomials,
    build_matrix,
    coefficient_from_permanent,
    coefficient_interpolation,
    evaluate_phi,
    expand_phi,
    normalize_variant,
)
from .witness import (
    IdentityViolation,
    WitnessNotFoundError,
    WitnessResult,
    build_witness,
    check_column_identity,
    exhaustive_witness_search,
)
from .solver import (
    MODE_PAIR_DISTINCT,
    MODE_PROPER_ONLY,
    solve_backtracking,
    solve_cn,
    solve_cn_guided,
)
from .sweep import SweepConfig, run_sweep
from .instances import (
    InstanceFormatError,
    instance_from_obj,
    instance_to_obj,
    read_instance,
    read_weighting,
    weighting_from_obj,
    weighting_to_obj,
)

__version__ = "0.1.0"
