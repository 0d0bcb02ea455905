"""Arc-preserving mapping classes of punctured surfaces, computed on the fundamental group."""

from .automorphism import Automorphism, Move, NotInvertible
from .extension import (
    Member,
    Refuted,
    Unknown,
    coset_equivalent,
    kernel_test,
    lagrangian_test,
    membership,
    sigma_prime_member,
)
from .generators import MappingClass, catalog, dehn_twist, generating_set, named, parse_word, table
from .linktool import abelianization, alexander_matrix, elementary_ideal, link_presentation
from .relations import relation_suite
from .surface import Signature, build_signature, puncture_loop
from .words import Word

__all__ = [
    "Automorphism",
    "MappingClass",
    "Member",
    "Move",
    "NotInvertible",
    "Refuted",
    "Signature",
    "Unknown",
    "Word",
    "abelianization",
    "alexander_matrix",
    "build_signature",
    "catalog",
    "coset_equivalent",
    "dehn_twist",
    "elementary_ideal",
    "generating_set",
    "kernel_test",
    "lagrangian_test",
    "link_presentation",
    "membership",
    "named",
    "parse_word",
    "puncture_loop",
    "relation_suite",
    "sigma_prime_member",
    "table",
]
