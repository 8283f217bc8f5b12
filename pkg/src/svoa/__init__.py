"""Exact computer algebra for lattice super vertex operator algebras."""

from ._backend import NAME as BACKEND

__version__ = "0.1.0"
