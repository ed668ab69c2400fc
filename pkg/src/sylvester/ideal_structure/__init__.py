"""Maximal ideals, generator factorization, quotient rings and CRT splitting."""
from .ideals import (CentralSkewGenerator, Descriptor, IdealFactorization, InvalidGenerator,
                     IrreduciblePoly, NotCentral, PrimeInt, Quotient, build_quotient,
                     central_generator_check, crt_split, factor_generator, ideal_generator,
                     is_central, parse_descriptor, principal_part)
from .quotients import SkewQuotient, skew_quotient, skew_quotient_from_element

__all__ = [
    "CentralSkewGenerator", "Descriptor", "IdealFactorization", "InvalidGenerator",
    "IrreduciblePoly", "NotCentral", "PrimeInt", "Quotient", "SkewQuotient", "build_quotient",
    "central_generator_check", "crt_split", "factor_generator", "ideal_generator", "is_central",
    "parse_descriptor", "principal_part", "skew_quotient", "skew_quotient_from_element",
]
