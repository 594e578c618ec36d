"""Exact computations in the level-one q-deformed Fock space."""

__version__ = "0.1.0"
