"""Distinguishing sequences for Mealy automata, transformation semigroup
complexity, k-graph walk compression, Landau's function, and the bound
formulas connecting them — exact and cross-verified at desk scale."""

from .automata import (MealyAutomaton, PartialSemiautomaton, Partition,
                       image, is_reduced, minimize, run, uncertainty)
from .pds import PdsResult, has_pds, shortest_pds, worst_case_pds
from .semigroup import (ClosureResult, PartialBijection, Transformation,
                        closure, complexity, compose, directed_diameter,
                        group_worst_diameter, restriction_complexity,
                        worst_case_complexity)
from .kgraph import (KGraph, Walk, build_kgraph, compress_walk,
                     compress_walk_report, eval_walk, saturate, scc, to_dot)
from .extremal import (SokolovskiiInstance, fig1_automaton,
                       sokolovskii_instance, verify_lower_bound)
from .landau import LandauValue, landau, max_order_permutation
from .sync import (is_irreducible, shortest_carefully_synchronizing,
                   shortest_irreducible)
from . import bounds, fileio, verify

__version__ = "0.1.0"
