"""Exact brute-force realization of diagonal Nichols algebras as shuffle subalgebras."""

from .nichols import (
    NicholsAlgebra,
    adjoint_power_nonzero,
    commutator_check,
    enumerate_coideals_small,
    oracle_cartan_entry,
    symmetrizer_dim,
    verify_coideal,
)

__all__ = [
    "NicholsAlgebra",
    "adjoint_power_nonzero",
    "commutator_check",
    "enumerate_coideals_small",
    "oracle_cartan_entry",
    "symmetrizer_dim",
    "verify_coideal",
]
