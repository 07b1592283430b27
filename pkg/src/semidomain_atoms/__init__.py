"""Atoms and strong atoms of monoids of nonnegative-integer
combinations of powers of a positive algebraic number.

Given a primitive irreducible polynomial m with a positive real root
alpha, the additive monoid generated by {p(alpha) : p has nonnegative
integer coefficients} has an isomorphism class that depends only on m.
This package computes the pair

    (number of strong atoms, number of atoms)

with machine-checkable certificates: explicit multiplier witnesses when
something decomposes, sign-variation bounds and leading-coefficient
obstructions when nothing can, and closed-form classifications for the
two-term and degree-2 shapes.  A power-substitution scaling law and an
explicit two-parameter family realize every pair (n, n+1) with n >= 4.

Everything is exact — integer and rational arithmetic only.
"""

from .irreducibility import (FactorSearchCaps, Irreducible,
                             IrreducibilityResult, Reducible, Unknown,
                             certify_irreducible, eisenstein_check,
                             rational_roots)
from .monoid import (AlgebraicNumberSpec, AtLeast, Atomic, AtomicityDetector,
                     BinomialRelation, Certificate, Count, Degree2Case,
                     DescartesBound, EisensteinPrime, Finite, Infinite,
                     MultiplierWitness, NotAtomic, PairResult,
                     TransformScaling, UfmMinimalPair, UndecidedAtomicity,
                     UnsupportedInputError, analyze, atomicity_check,
                     binomial_check, classify_degree2, count_atoms,
                     count_strong_atoms, counts_equal, ufm_check,
                     verify_certificate)
from .oracle import (FactorizationMultiset, MonoidElement, NonStrong,
                     OracleCaps, StrongUpTo, enumerate_factorizations,
                     reduce_element, strong_check_oracle)
from .polycore import (IntPoly, MinimalPair, RatPoly, content_primitive,
                       divmod_rat, gcd_rat, minimal_pair, reduce_mod,
                       substitute_power)
from .rootcount import (RootInterval, SturmChain, isolate_positive_roots,
                        positive_root_count, sign_variations,
                        squarefree_part)
from .signsearch import (Caps, ExhaustedCaps, InfeasibleProven,
                         MonicAtomPattern, SingleNegativeAt,
                         StrongPrefixPattern, UnitRepresentation, Witness,
                         descartes_prune, integer_witness_search,
                         pattern_matches, pattern_max_variations,
                         rational_feasibility)
from .transforms import (FamilyParams, TransformReducibleError,
                         TransformUncertifiedError, family_polynomial,
                         transform_scale)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # polycore
    "IntPoly", "RatPoly", "MinimalPair", "content_primitive", "divmod_rat",
    "gcd_rat", "minimal_pair", "reduce_mod", "substitute_power",
    # rootcount
    "SturmChain", "RootInterval", "sign_variations", "squarefree_part",
    "positive_root_count", "isolate_positive_roots",
    # irreducibility
    "FactorSearchCaps", "Irreducible", "Reducible", "Unknown",
    "IrreducibilityResult", "certify_irreducible", "eisenstein_check",
    "rational_roots",
    # signsearch
    "Caps", "MonicAtomPattern", "StrongPrefixPattern", "SingleNegativeAt",
    "UnitRepresentation", "Witness", "InfeasibleProven", "ExhaustedCaps",
    "pattern_matches", "pattern_max_variations", "descartes_prune",
    "rational_feasibility", "integer_witness_search",
    # monoid
    "UnsupportedInputError", "AlgebraicNumberSpec", "Finite", "Infinite",
    "AtLeast", "Count", "counts_equal", "PairResult", "MultiplierWitness",
    "DescartesBound",
    "BinomialRelation", "Degree2Case", "EisensteinPrime", "TransformScaling",
    "UfmMinimalPair", "AtomicityDetector", "Certificate", "Atomic",
    "NotAtomic", "UndecidedAtomicity", "atomicity_check", "ufm_check",
    "binomial_check", "classify_degree2", "count_atoms", "count_strong_atoms",
    "analyze", "verify_certificate",
    # transforms
    "FamilyParams", "family_polynomial", "TransformReducibleError",
    "TransformUncertifiedError", "transform_scale",
    # oracle
    "OracleCaps", "MonoidElement", "FactorizationMultiset", "reduce_element",
    "enumerate_factorizations", "StrongUpTo", "NonStrong",
    "strong_check_oracle",
]
