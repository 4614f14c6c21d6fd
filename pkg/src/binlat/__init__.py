"""Exact lattice-point combinatorics of binomial ideals.

Subpackages by theme: integer linear algebra and lattices (intlinalg,
lattices, linprog), the binomial Groebner engine (scalars, binomials,
groebner, congruence, truncation), binomial primary decomposition
(decompose), and the three application layers (horn, games, chem) behind a
JSON command-line interface (schemas, cli).
"""

__version__ = "0.1.0"
