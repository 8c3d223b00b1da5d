"""Stable derivators at desk scale.

Strict diagrams of bounded chain complexes over F_p model a stable derivator;
homotopy Kan extensions are computed by explicit bar and cobar complexes.
Diagrams of vector spaces with ordinary (co)limits give the pointed,
non-stable contrast.
"""

from . import chainalg, derops, diagram, fincat, kan, linalg, repmodel, vect
from .chainalg import ChainComplex, ChainMap
from .diagram import Diagram, DiagramMap
from .fincat import FinCat, Functor

__all__ = [
    "ChainComplex", "ChainMap", "Diagram", "DiagramMap", "FinCat", "Functor",
    "chainalg", "derops", "diagram", "fincat", "kan", "linalg", "repmodel", "vect",
]
__version__ = "0.1.0"
