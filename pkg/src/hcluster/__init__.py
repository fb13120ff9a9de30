"""Symbolic engine for weak reductions of Heegaard splittings and the
equivalent-cluster structure of their disk complexes."""

__version__ = "0.1.0"
