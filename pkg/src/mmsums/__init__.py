"""Exact verification of Vandermonde-weighted lattice sums and their q-analogues.

Brute-force sums, closed-form products, classical group characters,
Pfaffian identities and terminating hypergeometric transformations, all in
exact rational arithmetic.
"""

__version__ = "0.1.0"
