"""Brute-force oracles on explicit polynomial realisations."""
from .complex import GradedModule, spencer_bruteforce, spencer_bruteforce_module
from .jets import (
    ConcreteError,
    GradedSubspace,
    MatrixLieData,
    PolynomialMap,
    fundamental_form_dims,
    iota_closure_check,
    realize_nu,
)
from .prolong import ProlongationResult, prolong, trace_orthogonal_complement

__all__ = [
    "ConcreteError",
    "GradedModule",
    "GradedSubspace",
    "MatrixLieData",
    "PolynomialMap",
    "ProlongationResult",
    "fundamental_form_dims",
    "iota_closure_check",
    "prolong",
    "realize_nu",
    "spencer_bruteforce",
    "spencer_bruteforce_module",
    "trace_orthogonal_complement",
]
