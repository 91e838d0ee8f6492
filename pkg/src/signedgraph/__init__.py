"""Exact combinatorics on signed graphs.

Signed-graph representation with switching and balance, generalized Petersen
generators with known worst-case signatures, exact solvers for frustration
index / frustration number / maximum frustration, and a verification harness
for the associated bounds.
"""

from .core import (CycleBasis, Graph, Signature, SignedGraph, SwitchSet,
                   canonical_class_form, complete_bipartite_graph,
                   complete_graph, cycle_basis, cycle_graph, is_balanced,
                   path_graph, sign_of_cycle, switch, switching_equivalent)
from .errors import (InvalidInputError, InvalidParametersError, ParseError,
                     ResourceLimitError, SignedGraphError)
from .io import parse_signed_graph, serialize_roles, serialize_signed_graph
from .petersen import (GnLayout, PetersenLayout, enumerate_cycles_of_length,
                       extremal_signature_k2, extremal_signature_k3,
                       extremal_signature_prism, generate_gn,
                       generate_petersen, inner_cycles)
from .solvers import (SolveResult, frustration_index,
                      frustration_index_deletion_oracle, frustration_number,
                      max_frustration, max_frustration_lower_bound,
                      minimum_signatures, restricted_min_signature)
from .verify import (TheoremReport, VerifyConfig, all_pass,
                     check_cubic_half_bound, check_fi_equals_fn,
                     check_gcd1_bound, check_gcdd_bound,
                     check_lemma_restricted, check_p3kk_bound,
                     check_triangle_free_bound, reports_to_csv,
                     reports_to_markdown, run_full_suite)

__version__ = "0.1.0"

__all__ = [
    "Graph", "Signature", "SignedGraph", "SwitchSet", "CycleBasis",
    "sign_of_cycle", "switch", "is_balanced", "cycle_basis",
    "switching_equivalent", "canonical_class_form",
    "cycle_graph", "path_graph", "complete_graph", "complete_bipartite_graph",
    "PetersenLayout", "GnLayout", "generate_petersen", "generate_gn",
    "inner_cycles", "enumerate_cycles_of_length",
    "extremal_signature_prism", "extremal_signature_k2", "extremal_signature_k3",
    "SolveResult", "frustration_index", "frustration_index_deletion_oracle",
    "frustration_number", "restricted_min_signature", "max_frustration",
    "max_frustration_lower_bound", "minimum_signatures",
    "TheoremReport", "VerifyConfig", "run_full_suite", "all_pass",
    "check_cubic_half_bound", "check_triangle_free_bound", "check_gcd1_bound",
    "check_gcdd_bound", "check_p3kk_bound", "check_lemma_restricted",
    "check_fi_equals_fn", "reports_to_csv", "reports_to_markdown",
    "parse_signed_graph", "serialize_signed_graph", "serialize_roles",
    "SignedGraphError", "InvalidInputError", "InvalidParametersError",
    "ParseError", "ResourceLimitError",
    "__version__",
]
