"""Strong orientations of bridgeless graphs with small diameter.

Constructive orientations with guaranteed diameter bounds in terms of the
order and the number of blocks, an exact oriented-diameter solver with two
independent routes, and the extremal families showing the bounds are tight.
"""

from __future__ import annotations

from orientdia.decomposition import BlockDecomposition, decompose, find_bridge, is_block_graph, is_bridgeless
from orientdia.errors import ContractViolation, InfeasibleError, InputError, OrientdiaError, ResourceError
from orientdia.exact import (
    OrientationCertificate,
    oriented_diameter,
    oriented_diameter_bruteforce,
    oriented_diameter_decomposed,
)
from orientdia.families import bounds, gen_block_extremal, gen_gnp_extremal
from orientdia.graph import INFINITE, Digraph, MultiGraph, diameter, is_strongly_connected
from orientdia.orient import blockgraph_orientation, robbins_orientation, theorem1_orientation

__version__ = "0.1.0"

__all__ = [
    "INFINITE",
    "BlockDecomposition",
    "ContractViolation",
    "Digraph",
    "InfeasibleError",
    "InputError",
    "MultiGraph",
    "OrientationCertificate",
    "OrientdiaError",
    "ResourceError",
    "blockgraph_orientation",
    "bounds",
    "decompose",
    "diameter",
    "find_bridge",
    "gen_block_extremal",
    "gen_gnp_extremal",
    "is_block_graph",
    "is_bridgeless",
    "is_strongly_connected",
    "oriented_diameter",
    "oriented_diameter_bruteforce",
    "oriented_diameter_decomposed",
    "robbins_orientation",
    "theorem1_orientation",
]
