"""Sylvester rank functions over concrete rings: exact evaluation,
normal forms, classification of extreme points and decomposition."""

__version__ = "0.1.0"
