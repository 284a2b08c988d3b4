"""Exact symbolic computation for the *-Markov equation for Laurent polynomials."""

__version__ = "0.1.0"
