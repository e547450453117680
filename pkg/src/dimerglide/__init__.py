"""Gliding systems, dimer complexes and dimer groups of finite graphs and hypergraphs."""
from .braid import (MarkedCovering, VOrientation, braid_permutation, compose, cycle_notation,
                    glide_marked, invert, one_line, theta_n_permutation)
from .cycles import (BudgetExceeded, Cycle, EvenCycle, decompose, delete_odd_support,
                     enumerate_cycles, even_data, independent, is_cyclic)
from .dimer import (ComplexPoint, GlideLoop, LabelingComponent, dimer_complex, dimer_hull,
                    enumerate_dimer_coverings, evaluate, is_dimer_labeling, is_flat,
                    labeling_components, random_loop)
from .formats import CORPUS, load_corpus
from .glide import (Cube, CubeComplex, GlidingSystem, InconsistencyError, NPCReport,
                    build_complex, canonical_cube, check_3cube, check_flag, check_regular,
                    check_simple, check_square, glide, hull, npc_verdict)
from .hypergraph import (GRAPH, HYPERGRAPH, EdgeSet, Hypergraph, HypergraphError,
                         disjoint_union, load_hypergraph, parse_hypergraph, subdivide)
from .presentation import (Presentation, abelianization, dimer_presentation,
                           glide_presentation, pi1_spanning_tree, smith_diagonal, tietze_reduce)
from .raag import RAAG, Orientation, artin_group, edge_artin_group, typing_word, u_word

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CORPUS",
    "ComplexPoint",
    "Cube",
    "CubeComplex",
    "Cycle",
    "EdgeSet",
    "EvenCycle",
    "GRAPH",
    "GlideLoop",
    "GlidingSystem",
    "HYPERGRAPH",
    "Hypergraph",
    "HypergraphError",
    "InconsistencyError",
    "LabelingComponent",
    "MarkedCovering",
    "NPCReport",
    "Orientation",
    "Presentation",
    "RAAG",
    "VOrientation",
    "abelianization",
    "artin_group",
    "braid_permutation",
    "build_complex",
    "canonical_cube",
    "check_3cube",
    "check_flag",
    "check_regular",
    "check_simple",
    "check_square",
    "compose",
    "cycle_notation",
    "decompose",
    "delete_odd_support",
    "dimer_complex",
    "dimer_hull",
    "dimer_presentation",
    "disjoint_union",
    "edge_artin_group",
    "enumerate_cycles",
    "enumerate_dimer_coverings",
    "evaluate",
    "even_data",
    "glide",
    "glide_marked",
    "glide_presentation",
    "hull",
    "independent",
    "invert",
    "is_cyclic",
    "is_dimer_labeling",
    "is_flat",
    "labeling_components",
    "load_corpus",
    "load_hypergraph",
    "npc_verdict",
    "one_line",
    "parse_hypergraph",
    "pi1_spanning_tree",
    "random_loop",
    "smith_diagonal",
    "subdivide",
    "theta_n_permutation",
    "tietze_reduce",
    "typing_word",
    "u_word",
]
