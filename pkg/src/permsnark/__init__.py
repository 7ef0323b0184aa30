"""Exact construction and verification of cyclically 5-edge-connected permutation snarks."""

__version__ = "0.1.0"

from .graph import Graph, GraphError, Graph6Error, Subgraph, emit_dot, emit_graph6, girth, parse_graph6
from .factor import FactorError, PermutationReport, TwoFactor, find_permutation_2factors, verify_permutation_structure
from .construction import (
    Anchor,
    Block,
    GluingTable,
    PermutationGraph,
    TransitionedFourRegular,
    assemble_H,
    build_block,
    build_family,
    contract_spokes,
    discover_gluing,
    family_blocks,
    load_canonical_table,
    petersen,
    select_anchor,
)
from .cover import (
    CoverSolution,
    Verdict,
    ccd_search,
    find_any_cdc,
    find_cdc_containing,
    four_member_cdc,
    pcdc_enumerate,
    three_edge_coloring,
)
from .connectivity import (
    CutWitness,
    cyclic_edge_connectivity,
    essential_edge_connectivity,
    even_cut_parity_check,
    verify_cut_structure,
)
