"""Nilpotent-orbit quasi-admissibility and covering duality toolkit."""

__version__ = "0.1.0"
