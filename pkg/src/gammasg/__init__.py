"""Finite Γ-semigroups: ideals, Green's relations, simplicity, prime ideals
and an executable theorem-conformance harness."""

from .core import ElementSet, GammaSemigroup, IdempotentMode, RegularMode
from .errors import GammaSemigroupError
from .ideals import IdealKind, all_ideals, brute_force_ideals, principal_ideal, restrict_to
from .io import parse, serialize

__all__ = [
    "ElementSet",
    "GammaSemigroup",
    "GammaSemigroupError",
    "IdealKind",
    "IdempotentMode",
    "RegularMode",
    "all_ideals",
    "brute_force_ideals",
    "parse",
    "principal_ideal",
    "restrict_to",
    "serialize",
]

__version__ = "0.1.0"
