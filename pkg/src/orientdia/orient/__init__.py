"""Constructive orientation procedures."""

from orientdia.orient.basic import (
    PartialOrientation,
    complete_graph,
    complete_orientation,
    extend_orientation,
    robbins_orientation,
)
from orientdia.orient.lemma import lemma1_orientation
from orientdia.orient.paths import PathPair, two_disjoint_paths
from orientdia.orient.theorem import (
    OrientationReport,
    blockgraph_orientation,
    robbins_report,
    theorem1_orientation,
)
from orientdia.orient.tree_extension import (
    ExtensionOrientation,
    ExtPath,
    TreeExtension,
    all_pair_bound,
    tree_extension_orientation,
    tree_pair_bound,
)

__all__ = [
    "PartialOrientation",
    "PathPair",
    "ExtPath",
    "TreeExtension",
    "ExtensionOrientation",
    "OrientationReport",
    "robbins_orientation",
    "robbins_report",
    "extend_orientation",
    "complete_graph",
    "complete_orientation",
    "two_disjoint_paths",
    "lemma1_orientation",
    "tree_pair_bound",
    "all_pair_bound",
    "tree_extension_orientation",
    "theorem1_orientation",
    "blockgraph_orientation",
]
