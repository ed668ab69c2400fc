"""Unique convex decomposition of rank functions into extreme points."""
from .core import (BSequence, DecompositionResult, NotARankFunction, RankOracle, b_sequence,
                   coefficients_from_b, decompose_artinian, decompose_global, decompose_product)

__all__ = [
    "BSequence", "DecompositionResult", "NotARankFunction", "RankOracle", "b_sequence",
    "coefficients_from_b", "decompose_artinian", "decompose_global", "decompose_product",
]
