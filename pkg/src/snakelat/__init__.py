"""snakelat: exact combinatorics of generalized snake posets.

A generalized snake poset is a width-2 distributive lattice assembled by
gluing square faces according to a word over {L, R}.  This package builds
those posets and their lattices of upper order ideals, computes chain
polynomials, h*-polynomials and Ehrhart polynomials by several independent
methods, and verifies the structural theorems and conjectured properties
over exhaustive sweeps of words.  All core arithmetic is exact (arbitrary
precision integers and rationals).
"""

from snakelat.words import SnakeWord, parse, complement, canonicalize, swap
from snakelat.polynomial import Poly

__version__ = "0.1.0"

__all__ = [
    "SnakeWord",
    "parse",
    "complement",
    "canonicalize",
    "swap",
    "Poly",
    "__version__",
]
