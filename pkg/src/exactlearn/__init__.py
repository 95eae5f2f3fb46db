"""Exact learning over finite concept tables with membership and equivalence queries."""

from .estimators import ExactDepthSearch, QueryTreeLearner, StructureProfiler
from .families import FAMILIES, Caps, FamilySpec, StructureProfile, family_table, generate, indicator_estimate
from .learners import (LEARNERS, build_complete_tree, learn_eq_halving, learn_eq_rank,
                       learn_eq_sequential, learn_membership_halving, learn_mp_rank,
                       learn_proper_halving, learn_proper_sequential)
from .oracle import Query, best_first_query, exact_depth
from .table import (ConceptTable, EmptyTableError, GateExceeded, Literal, i_reduction_number,
                    is_consistent, is_shattered, minimal_equivalent_subsystem,
                    minimal_inconsistent_subsystem, rank, reduction_number, restrict,
                    sauer_bound_holds, solution_set, system, vc_dimension)
from .tree import (ALL_MODES, DecisionTree, EquivalenceNode, Leaf, MalformedTree, MembershipNode, PathTrace,
                   QueryMode, classify_queries, complete_paths, depth, is_admissible, run_tree, to_proper_only,
                   verify_solves)

__version__ = "0.1.0"

__all__ = [
    "ExactDepthSearch",
    "QueryTreeLearner",
    "StructureProfiler",
    "FAMILIES",
    "Caps",
    "FamilySpec",
    "StructureProfile",
    "family_table",
    "generate",
    "indicator_estimate",
    "LEARNERS",
    "build_complete_tree",
    "learn_eq_halving",
    "learn_eq_rank",
    "learn_eq_sequential",
    "learn_membership_halving",
    "learn_mp_rank",
    "learn_proper_halving",
    "learn_proper_sequential",
    "Query",
    "best_first_query",
    "exact_depth",
    "ConceptTable",
    "EmptyTableError",
    "GateExceeded",
    "Literal",
    "i_reduction_number",
    "is_consistent",
    "is_shattered",
    "minimal_equivalent_subsystem",
    "minimal_inconsistent_subsystem",
    "rank",
    "reduction_number",
    "restrict",
    "sauer_bound_holds",
    "solution_set",
    "system",
    "vc_dimension",
    "DecisionTree",
    "EquivalenceNode",
    "Leaf",
    "MalformedTree",
    "MembershipNode",
    "PathTrace",
    "QueryMode",
    "ALL_MODES",
    "is_admissible",
    "classify_queries",
    "complete_paths",
    "depth",
    "run_tree",
    "to_proper_only",
    "verify_solves",
]
