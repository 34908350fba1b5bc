"""Deciding low Cayley complexity of 1-dof tree-decomposable graphs.

The library tests tree-decomposability by cluster merging, derives
construction sequences from base non-edges, decides low Cayley
complexity both by the definitional extreme-graph oracle and by the
fast admissible-pair recognizer, and ships generators for the example
and counterexample families plus structural predicates (Laman rigidity,
planarity, exhaustive minor search) used to verify the theory.
"""

from .errors import (
    BadSize,
    Disconnected,
    EmptyGraph,
    ExtremeEdgeExists,
    HostTooLarge,
    IndexOutOfRange,
    LowCayleyError,
    NoSuchEdge,
    NotABaseNonEdge,
    NotOneDofTreeDecomposable,
    ParseError,
    StuckConstruction,
    TooFewSteps,
    TooSmall,
    UnknownFamily,
)
from .graph import (
    Graph,
    MinorWitness,
    complete_bipartite,
    complete_graph,
    contract_edge,
    cycle_graph,
    format_graph,
    has_minor,
    is_planar,
    is_triangle_free,
    parse_graph,
    path_graph,
)
from .rigidity import RigidityVerdict, check_rigidity, exists_rigid_subgraph_containing
from .treedecomp import (
    ClusterSet,
    DecompNode,
    DecompositionTree,
    cdeg,
    is_tree_decomposable,
    maximal_clusters,
)
from .construction import (
    ConstructionSequence,
    ConstructionStep,
    ExtremeGraphRef,
    derive_construction,
    extreme_graph,
    find_base_non_edges,
    has_one_path_property,
    is_one_path,
    last_level,
    normalize_base_non_edge,
)
from .cayley import (
    AdmissiblePairList,
    BaseInvarianceReport,
    CayleyVerdict,
    FourCycle,
    find_four_cycle,
    low_cayley_brute,
    low_cayley_fast,
    low_cayley_graph,
    verify_base_invariance,
)
from .generators import (
    GeneratorSpec,
    gen_clique_minor_1path,
    gen_clique_minor_trifree,
    gen_fan,
    gen_lemma57_1a,
    gen_random,
    gen_six_cluster_base,
)

__version__ = "0.1.0"
