"""Matrices, field elimination and certified diagonal forms."""
from .certificate import DiagonalCertificate, ElementaryOp, verify_certificate
from .elimination import field_rank_values, inverse_over_field, rank_mod_p, rank_over_field
from .euclid import (diagonalize_skew, laurent_shift, right_gcd_degree, skew_left_divide,
                     skew_right_divide, smith_form)
from .local import diagonal_valuations, diagonalize_local_artinian, local_valuations
from .matrix import RingMatrix, parse_matrix

__all__ = [
    "DiagonalCertificate", "ElementaryOp", "RingMatrix", "diagonal_valuations",
    "diagonalize_local_artinian", "local_valuations", "diagonalize_skew", "field_rank_values",
    "inverse_over_field", "laurent_shift", "parse_matrix", "rank_mod_p", "rank_over_field",
    "right_gcd_degree", "skew_left_divide", "skew_right_divide", "smith_form",
    "verify_certificate",
]
