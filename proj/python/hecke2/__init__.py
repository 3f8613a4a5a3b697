"""Exact computation in the rank-2 cyclotomic Hecke algebra.

Thin wrapper over the compiled extension: symbolic centre-basis
construction, the identity-verification suite, and exact specialized
linear algebra (rationals or prime fields).
"""

try:
    from ._hecke2 import (
        centre_basis_json,
        centre_dimension,
        count_multipartitions_str,
        counterexample_q1,
        cyclo_product_json,
        semisimplicity,
        verify_json,
    )
except ImportError:  # extension built out-of-tree (e.g. straight from CMake)
    from _hecke2 import (
        centre_basis_json,
        centre_dimension,
        count_multipartitions_str,
        counterexample_q1,
        cyclo_product_json,
        semisimplicity,
        verify_json,
    )

__all__ = [
    "centre_basis_json",
    "centre_dimension",
    "count_multipartitions",
    "count_multipartitions_str",
    "counterexample_q1",
    "cyclo_product_json",
    "semisimplicity",
    "verify_json",
]


def count_multipartitions(m: int, n: int) -> int:
    """Number of m-tuples of partitions with total size n."""
    return int(count_multipartitions_str(m, n))
