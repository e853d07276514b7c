"""Globally simple integer Heffter arrays H(n;k).

Thin wrapper over the compiled _heffter extension: construction for
k = 1 (mod 4) with n = 0 or 3 (mod 4), independent verification of the
defining properties, partial-sum tables, cyclic cycle decompositions of
K_{2nk+1}, ordering compatibility checks, and brute-force search for
tiny arrays.
"""

try:
    from ._heffter import *  # installed package layout
    from ._heffter import __doc__  # noqa: F401
except ImportError:  # in-tree builds put _heffter on sys.path directly
    from _heffter import *  # noqa: F401,F403
    from _heffter import __doc__  # noqa: F401

__all__ = [
    "Array",
    "Dims",
    "construct",
    "wrap_index",
    "canonical_residue",
    "from_json",
    "from_csv",
    "load_array",
    "verify",
    "is_heffter",
    "is_globally_simple",
    "partial_sums",
    "is_simple",
    "sum_table",
    "sum_table_csv",
    "diagonal_bands",
    "base_cycles",
    "decompose_check",
    "compatibility",
    "gcd_compat_predicate",
    "search",
    "find_simple_ordering",
]
