"""Exact-arithmetic computations around Weyl groups and finite groups of Lie type."""

__version__ = "0.1.0"
