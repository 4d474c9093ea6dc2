"""tonelab: t-tone graph coloring toolkit.

A t-tone k-coloring assigns each vertex a t-subset of [1, k] so that any
two distinct vertices u, v share fewer than d(u, v) colors. The package
provides the verifier, exact small-instance oracles, an optimal 2-tone
forest colorer, dense- and sparse-regime constructive pipelines, seeded
instance generators, and a CSV experiment harness.
"""

from .coloring import (
    Partition,
    ToneColoring,
    Valid,
    Violation,
    alpha_of_coloring,
    kappa,
    partitions_to_coloring,
    respects,
    set_respects,
    tone_lower_bound,
    verify,
    verify_partial,
)
from .dense import DenseParams, dense_params, t_tone_color_dense
from .exact import (
    Infeasible,
    SearchBudget,
    exact_chromatic,
    exact_tau,
    independence_number,
    max_independent_set,
    t_tone_colorable,
)
from .generators import (
    DegreeSequence,
    configuration_model,
    gnp,
    is_typical,
    planted_hubs,
    random_tree,
)
from .graph import (
    DistanceOracle,
    Graph,
    MultiGraph,
    components,
    induced_subgraph,
    is_forest,
    max_degree,
    neighborhood_shell,
    power_graph,
    truncated_distances,
)
from .sparse import SparseParams, core_decomposition, greedy_extend, sparse_color
from .trees import color_forest_2tone, greedy_t_tone_forest, min_greedy_palette

__version__ = "0.1.0"
