"""Cartan schemes, Weyl groupoids, the right Duflo order and the census of
graded right coideal subalgebras of Nichols algebras of diagonal type."""

__version__ = "0.1.0"

from .census import census, census_report, kharchenko_count, pbw_degrees
from .duflo import build_poset, lambda_plus, leq_duflo, to_dot
from .groupoid import (
    check_coxeter_relations,
    check_root_system,
    enumerate_morphisms_to,
    is_finite,
    longest_elements,
    real_roots,
)
from .scheme import (
    BraidingMatrix,
    CartanScheme,
    build_from_braiding,
    build_from_matrices,
    diagonal_cartan_entry,
)

__all__ = [
    "BraidingMatrix",
    "CartanScheme",
    "build_from_braiding",
    "build_from_matrices",
    "build_poset",
    "census",
    "census_report",
    "check_coxeter_relations",
    "check_root_system",
    "diagonal_cartan_entry",
    "enumerate_morphisms_to",
    "is_finite",
    "kharchenko_count",
    "lambda_plus",
    "leq_duflo",
    "longest_elements",
    "pbw_degrees",
    "real_roots",
    "to_dot",
]
