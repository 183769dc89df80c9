"""Exact verification of MacWilliams-type identities and Clifford-Weil
invariance for codes over Z/m that are stable under a permutation group."""

__version__ = "0.1.0"
