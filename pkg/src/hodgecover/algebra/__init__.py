"""Exact arithmetic used throughout the package.

Rationals are :class:`fractions.Fraction`; everything else (series, integer
normal forms, cyclotomic numbers) is built on top of them.
"""

from hodgecover.algebra.cyclotomic import Cyclotomic, cyclotomic_polynomial, galois_conjugate
from hodgecover.algebra.numbers import (
    binomial,
    euler_phi,
    format_rational,
    is_prime,
    parse_rational,
)
from hodgecover.algebra.series import BiSeries, series_expand_binomial
from hodgecover.algebra.smith import (
    IntMatrix,
    as_int_matrix,
    determinant,
    identity,
    is_smith_normal_form,
    matmul,
    smith_normal_form,
)

__all__ = [
    "BiSeries",
    "Cyclotomic",
    "IntMatrix",
    "as_int_matrix",
    "binomial",
    "cyclotomic_polynomial",
    "determinant",
    "euler_phi",
    "format_rational",
    "galois_conjugate",
    "identity",
    "is_prime",
    "is_smith_normal_form",
    "matmul",
    "parse_rational",
    "series_expand_binomial",
    "smith_normal_form",
]
