"""Exact free-fermion vertex operators and plane partition counts."""

from ._planefock import (
    PlanePartitionError,
    compute_sa,
    compute_sb,
    diagonal_slices,
    enumerate_dspp,
    enumerate_pp,
    gamma,
    is_diagonally_strict,
    macmahon_product,
    path_count,
    product_b,
    verify,
    weighted_dspp_count,
)

__all__ = [
    "PlanePartitionError",
    "compute_sa",
    "compute_sb",
    "diagonal_slices",
    "enumerate_dspp",
    "enumerate_pp",
    "gamma",
    "is_diagonally_strict",
    "macmahon_product",
    "path_count",
    "product_b",
    "verify",
    "weighted_dspp_count",
]
