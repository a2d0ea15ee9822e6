"""Legendrian and transverse satellites: block calculus, rewriting oracles and counting."""

__version__ = "0.1.0"
