"""Exact algebra of vector-valued nonsymmetric Jack polynomials for S_N."""

__version__ = "0.1.0"
