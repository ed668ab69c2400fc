"""Randomized verification of the rank function axioms."""
from .checks import (CHECKS, FamilyEvaluator, Relation, SuiteResult, VerifierConfig,
                     ViolationReport, check_invertible_invariance, check_nilpotent_monotone,
                     check_orthogonal_additivity, check_smat, check_smod, orthogonal_quadruple,
                     power_chain, run_family, verify_suite)
from .family import random_convex, random_convex_family, random_weights
from .sampler import MatrixSampler, ring_idempotents

__all__ = [
    "CHECKS", "FamilyEvaluator", "MatrixSampler", "Relation", "SuiteResult", "VerifierConfig",
    "ViolationReport", "check_invertible_invariance", "check_nilpotent_monotone",
    "check_orthogonal_additivity", "check_smat", "check_smod", "orthogonal_quadruple",
    "power_chain", "random_convex", "random_convex_family", "random_weights", "ring_idempotents",
    "run_family", "verify_suite",
]
