"""Exact decisions on local potential equivalence of Frobenius data."""

__version__ = "0.1.0"
