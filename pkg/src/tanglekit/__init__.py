"""Tangles, k-blocks, connectivity systems and branch decompositions at desk scale."""

from .brambles import Subgraph, SubgraphFamily, min_hitting_set, reed_family_from_tangle, tangle_from_family, touches
from .branchwidth import (
    BranchDecomposition,
    CubicTree,
    branch_width,
    fig4_decomposition,
    treewidth,
    verify_duality,
    verify_inequalities,
    width,
)
from .connectivity import ConnectivitySystem, MatroidOracle, evaluate, make_system, parse_matroid, verify_axioms
from .errors import BudgetExceeded, FalsificationError, ParseError, PreconditionError, TangleError
from .generators import named_graph
from .graph import Graph, format_graph, parse_graph
from .kappa import (
    ExceptionalCase,
    KappaTangle,
    check_kappa_tangle,
    enumerate_kappa_tangles,
    g_to_kappa,
    kappa_to_g,
    max_tangle_order,
)
from .separations import (
    BlockSet,
    Separation,
    Torso,
    enumerate_separations,
    is_k_connected,
    is_k_inseparable,
    is_quasi_4_connected,
    k_blocks,
    min_vertex_cut,
    torso,
    triconnected_components,
)
from .tangles import (
    AxiomReport,
    GraphTangle,
    big_component,
    block_tangle,
    check_graph_tangle,
    correspondence,
    enumerate_graph_tangles,
    example_tangle,
    improper_2block_counterexample,
    minimal_separations,
    restrict_to_block,
    tangle_core,
    truncate,
)
