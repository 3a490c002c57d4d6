"""Psi-class intersection numbers, pairings with combinatorial cycles, and
exact ranks of the pairing matrices R(d; g, n)."""

from .combinatorics import (
    GraphError,
    StableWeightedGraph,
    faber_expand,
    faber_matrix,
    partitions,
    profiles,
    profiles_all,
    refines,
    validate_graph,
    witness_graph,
)
from .intersection import (
    boundary_P,
    load_cache,
    psi_integral,
    q_sum,
    save_cache,
    two_point,
    two_point_poly,
)
from .kernels import BACKEND
from .pairing import PairingMatrix, exact_rank, kappa_rank, lambda_norm, pair, pairing_matrix

__all__ = [
    "BACKEND",
    "GraphError",
    "PairingMatrix",
    "StableWeightedGraph",
    "boundary_P",
    "exact_rank",
    "faber_expand",
    "faber_matrix",
    "kappa_rank",
    "lambda_norm",
    "load_cache",
    "pair",
    "pairing_matrix",
    "partitions",
    "profiles",
    "profiles_all",
    "psi_integral",
    "q_sum",
    "refines",
    "save_cache",
    "two_point",
    "two_point_poly",
    "validate_graph",
    "witness_graph",
]
