"""Flexibility and movability of Cayley graphs via NAC-colorings."""

from .errors import (
    AmbiguousColoring,
    CapacityExceeded,
    InvalidColoring,
    InvalidGenerator,
    InvalidInput,
    InvalidParameter,
    InvalidPartition,
    PredictionMismatch,
    RigidCayError,
)
from .families import (
    FamilyInstance,
    Prediction,
    abelian_family,
    dense_abelian_family,
    regularity_construction,
    sl_family,
    sl_product_family,
)
from .flex import ParamRealization, RealizationFrame, build_flex, evaluate, export_frames, verify_flex
from .graphs import (
    SimpleGraph,
    cartesian_product,
    cayley_graph,
    complete_graph,
    components,
    cycle_graph,
    degree_profile,
    path_graph,
)
from .groups import (
    FiniteGroup,
    GeneratorSet,
    direct_product,
    elementary_generators,
    elementary_matrix,
    is_generating,
    make_cyclic,
    make_sl,
    parse_descriptor,
    subgroup_closure,
    symmetric_closure,
    triangular_generators,
)
from .nac import Color, EdgeColoring, NacVerdict, generator_class_coloring, is_good_nac, is_nac, product_coloring
from .rigidity import Classification, RigidityReport, classify, is_laman_graph, laman_count_movable, pebble_game_23
from .search import SearchResult, search_nac
from .theorems import (
    ConditionReport,
    check_flexible_condition,
    check_movable_condition,
    check_pairwise_trivial,
    check_partition_condition,
)

__version__ = "0.1.0"
