"""Exact computations deciding when an equivariantly embedded compact
Hermitian symmetric space is determined by its fundamental forms."""

__version__ = "0.1.0"
