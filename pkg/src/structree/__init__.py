"""Structure trees of finite networks.

Thin cuts are enumerated, filtered level by level into a canonical nested
family, and turned into a tree whose geodesic minima answer every pairwise
max-flow question. A brute-force oracle checks all of it.
"""

from .atlas import LambdaTable, ThinCutRecord, lambda_table, mu, thin_cuts
from .errors import (
    BindingError,
    CapacityGuardError,
    InternalConsistencyError,
    NestingViolationError,
    ParseError,
    PreconditionError,
    StructreeError,
    VertexLookupError,
)
from .flow import Flow, flow_across, max_flow, min_cut_from_flow
from .io import dumps_tree_dot, dumps_tree_json, load_network, parse_edgelist, parse_json_network
from .nest import NestedCutSystem, build_canonical_nested_set, optimality_certificate, provenance
from .network import Cut, CutPair, Network, capacity, coboundary, corners, is_nested, is_tight
from .tree import (
    FactorGraph,
    GomoryHuTree,
    StructureTree,
    build_tree,
    canonical_expression,
    edge_realization,
    factor_graph,
    gomory_hu,
    nu_map,
    tree_max_flow,
    tree_min_cut,
)

__version__ = "0.1.0"
