"""Exact combinatorics of pattern-restricted permutations and Catalan-Schett polynomials."""

__version__ = "0.1.0"
