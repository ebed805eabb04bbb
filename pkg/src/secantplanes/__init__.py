"""Exact enumerative invariants of linear series with exceptional secant planes."""
__version__ = "0.1.0"
