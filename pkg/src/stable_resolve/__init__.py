"""Minimal free resolutions of stable monomial ideals, supported on the
poset of Eliahou-Kervaire admissible symbols and on a regular CW complex."""

from .cw import GradedCWComplex, build_cw
from .errors import (DomainError, MembershipError, ParseError, ResolveError,
                     StabilityError, StructuralError)
from .ideal import (MonomialIdeal, contains, decompose, decompose_product, is_stable,
                    load_ideal, minimalize, parse_ideal, stable_corpus)
from .monomial import DEFAULT_PRIME
from .oracle import compare_betti, koszul_betti
from .poset import BOTTOM, AdmissiblePoset, Symbol
from .resolution import FreeComplex, betti_table, build_ek_resolution, build_resolution
from .verify import run_all

__version__ = "0.1.0"
