"""Exact-arithmetic torsion engine for rational elliptic curves over
quadratic fields and finite levels of their Z_p-extensions."""

__version__ = "0.1.0"
