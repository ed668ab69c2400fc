"""Sylvester matrix rank functions: symbolic forms, exact evaluation, constructions."""
from .grammar import parse_rank, rank_text
from .operations import (Bounds, ModulePresentation, ProductCombine, center_inclusion, dim_module,
                         extend_center_rank, extreme_set, morita_inverse, morita_transfer,
                         ore_membership, product_combine, pullback, restrict_to_center,
                         scalar_embedding)
from .ranks import (ArtinianExtreme, Convex, DedekindExtreme, DedekindGeneric, FieldRank,
                    LaurentExtreme, LaurentGeneric, MatrixScaled, Pullback, RankFunction,
                    eval_element, eval_matrix, evaluate_linear_form, flatten_blocks)
from .representation import (diagonal_rank, lattice_rank, psi_matrix, representation_grid,
                             representation_rank)

__all__ = [
    "ArtinianExtreme", "Bounds", "Convex", "DedekindExtreme", "DedekindGeneric", "FieldRank",
    "LaurentExtreme", "LaurentGeneric", "MatrixScaled", "ModulePresentation", "ProductCombine",
    "Pullback", "RankFunction", "center_inclusion", "diagonal_rank", "dim_module",
    "eval_element", "eval_matrix", "evaluate_linear_form", "extend_center_rank", "extreme_set",
    "flatten_blocks", "lattice_rank", "morita_inverse", "morita_transfer", "ore_membership",
    "parse_rank", "product_combine", "psi_matrix", "pullback", "rank_text",
    "representation_grid", "representation_rank", "restrict_to_center", "scalar_embedding",
]
