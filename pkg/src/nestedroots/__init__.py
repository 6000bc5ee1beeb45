"""Exact computations with roots, walls and triangles in rank-3 Coxeter groups."""

__version__ = "0.1.0"
