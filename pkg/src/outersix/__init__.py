"""Computational verification of the exceptional outer automorphism of Sym_6.

The package enumerates, exhaustively and with independent cross-checks, the
automorphism groups of the small symmetric groups, constructs the outer
automorphisms of Sym_6 from antipodally labeled icosahedra, and replays the
same exceptional symmetry through the edge/factor geometry of the complete
graph on six vertices.
"""

from .errors import IntegrityError
from .perms import Permutation, parse_cycles

__version__ = "0.1.0"

__all__ = ["IntegrityError", "Permutation", "parse_cycles", "__version__"]
