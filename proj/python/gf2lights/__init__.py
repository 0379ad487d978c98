"""GF(2) linear algebra and Lights Out.

Vectors and matrix rows are strings of 0/1 characters. Vertices are 1-based.
"""

from ._core import (
    CellTooLarge,
    Error,
    NotSymmetric,
    PrefixTooLong,
    Unsolvable,
    certify_diagonal,
    nullspace,
    periodic_solution,
    prefix_set,
    rank,
    solve,
    solve_board,
    solve_diagonal,
    solve_grid,
    solve_prefix,
)

__all__ = [
    "CellTooLarge",
    "Error",
    "NotSymmetric",
    "PrefixTooLong",
    "Unsolvable",
    "certify_diagonal",
    "nullspace",
    "periodic_solution",
    "prefix_set",
    "rank",
    "solve",
    "solve_board",
    "solve_diagonal",
    "solve_grid",
    "solve_prefix",
]
