"""Exact private-neighbour maximisation and irredundance invariants of small graphs."""

__version__ = "0.1.0"

from pnmax.graph import (FamilySpec, Graph, GraphError, build_graph, cartesian_product,  # noqa: E402
                         emit_edge_list, emit_graph6, generate, members, parse_edge_list,
                         parse_graph6, vertex_set)
from pnmax.kinds import ParameterKind  # noqa: E402
from pnmax.pn import (PNTriple, VertexPNStatus, has_private_neighbor, pn_score,  # noqa: E402
                      pn_triple, set_class_predicate, vertex_status)
from pnmax.exact import (SolveOptions, SolveResult, SolverLimitError, reduce_to_class,  # noqa: E402
                         solve, solve_pn, solve_set_class)
from pnmax.structured import solve_pn_grid, solve_pn_tree, verify_tree_lower_bound  # noqa: E402

__all__ = [
    "FamilySpec", "Graph", "GraphError", "build_graph", "cartesian_product", "emit_edge_list",
    "emit_graph6", "generate", "members", "parse_edge_list", "parse_graph6", "vertex_set",
    "ParameterKind", "PNTriple", "VertexPNStatus", "has_private_neighbor", "pn_score", "pn_triple",
    "set_class_predicate", "vertex_status", "SolveOptions", "SolveResult", "SolverLimitError",
    "reduce_to_class", "solve", "solve_pn", "solve_set_class", "solve_pn_grid", "solve_pn_tree",
    "verify_tree_lower_bound",
]
