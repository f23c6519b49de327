"""Trace coordinates, numerical monodromy and the dodecahedral lattice representation."""

__version__ = "0.1.0"

from . import abelmono, algebra, charvar, covering, dodeca, lorentz, spingraft

__all__ = [
    "__version__",
    "abelmono",
    "algebra",
    "charvar",
    "covering",
    "dodeca",
    "lorentz",
    "spingraft",
]
