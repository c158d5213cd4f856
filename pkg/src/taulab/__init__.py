"""Exact and high-precision cross-checks for tau-functions and lattice-model partition functions."""

__version__ = "0.1.0"
