"""Explicit binary solutions to the upper nilpotent completion problem for
N_r, an exact Jordan-type oracle, and the resulting homogeneous Coxeter
connections."""

__version__ = "0.1.0"

from .connection import ConnectionForm, emit, residue
from .engine import RunOptions, RunResult, initialize, run, step_loop1, step_loop2
from .graphs import GlnGraph, canonical_nr_graph, graft, graph_of_matrix, heights, matrix_of_graph
from .invariants import check_invariant
from .jordan import exact_rank, is_nilpotent, jordan_type, rank_sequence
from .matrices import IntMatrix, LaurentMatrix, lmul, lpow, make_er, make_nr, omega, omega_inv
from .partitions import Partition, dominates, mdiff, mmax, msum, normalize, nr_type

__all__ = [
    "ConnectionForm", "emit", "residue",
    "RunOptions", "RunResult", "initialize", "run", "step_loop1", "step_loop2",
    "GlnGraph", "canonical_nr_graph", "graft", "graph_of_matrix", "heights", "matrix_of_graph",
    "check_invariant",
    "exact_rank", "is_nilpotent", "jordan_type", "rank_sequence",
    "IntMatrix", "LaurentMatrix", "lmul", "lpow", "make_er", "make_nr", "omega", "omega_inv",
    "Partition", "dominates", "mdiff", "mmax", "msum", "normalize", "nr_type",
]
