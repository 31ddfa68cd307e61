"""Irreducible components of nilpotent commuting varieties of symmetric pairs.

Combinatorial (ab)-Young-diagram calculus for the classical families, embedded
orbit tables for the exceptional cases, and an exact rational matrix oracle
that independently certifies every combinatorial formula.
"""

from .diagrams import AbDiagram, PairParams, PairType, enumerate_diagrams, parse, params_for

__all__ = [
    "AbDiagram",
    "PairParams",
    "PairType",
    "enumerate_diagrams",
    "parse",
    "params_for",
]

__version__ = "0.1.0"
