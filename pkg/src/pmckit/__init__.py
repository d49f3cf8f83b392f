"""Minimal separators, potential maximal cliques, and exact treewidth / fill-in.

Enumeration is parameterized either by a vertex cover (partition sweeps) or by
modular width (recursion over the modular decomposition tree); exhaustive
subset oracles provide ground truth, and a block dynamic program over the PMC
catalog computes treewidth and minimum fill-in exactly.
"""

from .bitset import VertexSet, canonical_sets
from .errors import CapExceeded, ContractViolation, GrParseError, InputError
from .graph import (
    CUBE_INDEX,
    Graph,
    complete,
    components,
    cube,
    cycle,
    empty_graph,
    full_components,
    generate,
    gnp,
    induced_subgraph,
    neighborhood,
    parse_gr,
    path,
    prefix_graph,
    read_gr,
    watermelon,
    watermelon_hubs,
    write_gr,
)
from .modular import (
    PRIME_NODE_CAP,
    ModuleNode,
    ModuleTree,
    base_enumerate,
    contract,
    enumerate_by_mw,
    expand,
    expand_graph,
    modular_decomposition,
    modular_width,
    pmcs_by_mw,
    separators_by_mw,
    tree_to_json,
)
from .recognition import (
    DEFAULT_ORACLE_CAP,
    ActivePairWitness,
    PmcCatalog,
    active_separators,
    brute_force_pmcs,
    brute_force_separators,
    is_minimal_separator,
    is_minimal_uv_separator,
    is_pmc,
    pmc_separators,
)
from .solvers import (
    DEFAULT_FILL_ORACLE_CAP,
    DEFAULT_TW_ORACLE_CAP,
    Block,
    brute_force_fill_in,
    brute_force_treewidth,
    dp_blocks,
    min_fill_in,
    treewidth,
)
from .vc import (
    FourPartition,
    ThreePartition,
    active_pmcs_by_vc,
    four_partitions,
    is_vertex_cover,
    minimum_vertex_cover,
    pmcs_by_vc,
    separators_by_vc,
    three_partitions,
)

__all__ = [
    "ActivePairWitness",
    "Block",
    "CUBE_INDEX",
    "CapExceeded",
    "ContractViolation",
    "DEFAULT_FILL_ORACLE_CAP",
    "DEFAULT_ORACLE_CAP",
    "DEFAULT_TW_ORACLE_CAP",
    "FourPartition",
    "Graph",
    "GrParseError",
    "InputError",
    "ModuleNode",
    "ModuleTree",
    "PRIME_NODE_CAP",
    "PmcCatalog",
    "ThreePartition",
    "VertexSet",
    "active_pmcs_by_vc",
    "active_separators",
    "base_enumerate",
    "brute_force_fill_in",
    "brute_force_pmcs",
    "brute_force_separators",
    "brute_force_treewidth",
    "canonical_sets",
    "complete",
    "components",
    "contract",
    "cube",
    "cycle",
    "dp_blocks",
    "empty_graph",
    "enumerate_by_mw",
    "expand",
    "expand_graph",
    "four_partitions",
    "full_components",
    "generate",
    "gnp",
    "induced_subgraph",
    "is_minimal_separator",
    "is_minimal_uv_separator",
    "is_pmc",
    "is_vertex_cover",
    "min_fill_in",
    "minimum_vertex_cover",
    "modular_decomposition",
    "modular_width",
    "neighborhood",
    "parse_gr",
    "path",
    "pmc_separators",
    "pmcs_by_mw",
    "pmcs_by_vc",
    "prefix_graph",
    "read_gr",
    "separators_by_mw",
    "separators_by_vc",
    "three_partitions",
    "tree_to_json",
    "treewidth",
    "watermelon",
    "watermelon_hubs",
    "write_gr",
]

__version__ = "0.1.0"
