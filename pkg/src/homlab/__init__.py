"""Tools for exploring the homomorphism order on finite graphs."""

from .errors import (
    BudgetExceededError,
    ConstructionRejectedError,
    GapError,
    HomlabError,
    IndeterminateComparisonError,
    InvalidParameterError,
    PreconditionError,
    StreamExhaustedError,
)
from .gadgets import (
    CheckRecord,
    GadgetRecipe,
    PointedGraph,
    VerifiedConstruction,
    build_block_family,
    build_cycle_block,
    build_indicator,
    build_interval_gadget,
    density_witness,
    find_sparse_incomparable,
    incomparable_pair,
    indicate,
)
from .graphs import Digraph, Graph, StructuralProfile, analyze
from .intervals import (
    ClaimRecord,
    IntervalEmbedding,
    VerificationReport,
    embed_poset_into_interval,
    gadget_for_interval,
    hom_count_correspondence,
    phi,
    verify_embedding,
)
from .io import (
    dumps_embedding,
    dumps_graph,
    dumps_pointed,
    dumps_poset,
    loads_embedding,
    loads_graph,
    loads_pointed,
    loads_poset,
    to_dot,
)
from .posets import (
    FinitePoset,
    embed_divisibility,
    embed_poset_to_odd_sets,
    odd_set_leq,
    odd_sets_to_cycle_family,
    random_poset,
)
from .solver import (
    ComparabilityVerdict,
    HomMapping,
    SolverBudget,
    compare,
    core_of,
    count_homs,
    hom_exists,
    is_isomorphic,
    is_rigid,
    path_threshold,
    verify_mapping,
)

__all__ = [
    "BudgetExceededError",
    "CheckRecord",
    "ClaimRecord",
    "ComparabilityVerdict",
    "ConstructionRejectedError",
    "Digraph",
    "FinitePoset",
    "GadgetRecipe",
    "GapError",
    "Graph",
    "HomMapping",
    "HomlabError",
    "IndeterminateComparisonError",
    "IntervalEmbedding",
    "InvalidParameterError",
    "PointedGraph",
    "PreconditionError",
    "SolverBudget",
    "StreamExhaustedError",
    "StructuralProfile",
    "VerificationReport",
    "VerifiedConstruction",
    "analyze",
    "build_block_family",
    "build_cycle_block",
    "build_indicator",
    "build_interval_gadget",
    "compare",
    "core_of",
    "count_homs",
    "density_witness",
    "dumps_embedding",
    "dumps_graph",
    "dumps_pointed",
    "dumps_poset",
    "embed_divisibility",
    "embed_poset_into_interval",
    "embed_poset_to_odd_sets",
    "find_sparse_incomparable",
    "gadget_for_interval",
    "hom_count_correspondence",
    "hom_exists",
    "incomparable_pair",
    "indicate",
    "is_isomorphic",
    "is_rigid",
    "loads_embedding",
    "loads_graph",
    "loads_pointed",
    "loads_poset",
    "odd_set_leq",
    "odd_sets_to_cycle_family",
    "path_threshold",
    "phi",
    "random_poset",
    "to_dot",
    "verify_embedding",
    "verify_mapping",
]
