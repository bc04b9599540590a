"""Tutte paths, 2-walks, and prism spanning paths in plane graphs.

The package works at finite scale: one-ended infinite families are
represented by deterministic level generators whose truncations carry
net prefixes, and every construction ships with a verifier for the
structural guarantee it is supposed to meet.
"""

from .plane import (
    FaceWalk,
    PlaneGraph,
    SubgraphRef,
    WalkSeq,
    clockwise_segment,
    inside_subgraph,
    outer_walk,
    trace_faces,
    validate,
)
from .connectivity import (
    BlockChain,
    BridgeRec,
    blocks,
    bridges_of,
    chain_along_path,
    find_small_cut_containing,
    internal_3cuts,
    is_ks_connected,
)
from .circuit import CircuitChain, chain_of_circuit_blocks, is_circuit_block, is_circuit_graph

__all__ = [
    "FaceWalk",
    "PlaneGraph",
    "SubgraphRef",
    "WalkSeq",
    "clockwise_segment",
    "inside_subgraph",
    "outer_walk",
    "trace_faces",
    "validate",
    "BlockChain",
    "BridgeRec",
    "blocks",
    "bridges_of",
    "chain_along_path",
    "find_small_cut_containing",
    "internal_3cuts",
    "is_ks_connected",
    "CircuitChain",
    "chain_of_circuit_blocks",
    "is_circuit_block",
    "is_circuit_graph",
]
