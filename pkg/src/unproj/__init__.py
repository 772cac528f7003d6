"""Exact computer algebra for graded parallel-unprojection constructions.

The package has three layers: an exact Groebner engine over the rationals
or a prime field (sparse polynomials, lex and weighted-grevlex orders,
dimension, weighted Hilbert series), the 4-intersection unprojection
construction producing a codimension-6 Gorenstein ideal from a pair of
cubics, and the three Fano 3-fold family quotients with their reference
invariants.  The ``unproj`` CLI fronts construction and verification.
"""

from .fields import GF, QQ, VERIFICATION_PRIME, field_from_name
from .ring import (
    GradedPolyRing,
    MonomialOrder,
    Polynomial,
    monomials_of_weighted_degree,
)
from .parsing import PolyParseError, format_poly, parse_poly
from .engine import groebner_basis, normal_form
from .ideals import GroebnerBasis, Ideal, is_regular_sequence, minimal_generators
from .dimension import UnitIdealError, codimension, dimension
from .hilbert import HilbertSeries, hilbert_series
from .maps import RingMap
from .unprojection import (
    FourIntersection,
    MultiplierError,
    PhiCertificate,
    PhiMap,
    UnprojectionIdeal,
    SpecializedUnprojection,
    apply_phi,
    base_unprojection,
    build_four_intersection,
    build_km_unprojection,
    build_phi,
    build_unprojection_ideal,
    compute_multiplier,
    km_phi_minors,
    multiplier_minor_factorization,
    specialize,
    verify_phi,
)
from .fano import (
    BettiTable,
    FAMILY_IDS,
    FamilyInstance,
    FanoFamilySpec,
    StratumSpec,
    UnknownFamilyError,
    betti_consistency,
    build_family,
    ci_canonical_twist,
    family_spec,
    strata_check,
    verify_family,
)
from .verification import CheckResult, generic_checks

__version__ = "0.1.0"

__all__ = [
    "GF",
    "QQ",
    "VERIFICATION_PRIME",
    "field_from_name",
    "GradedPolyRing",
    "MonomialOrder",
    "Polynomial",
    "monomials_of_weighted_degree",
    "PolyParseError",
    "format_poly",
    "parse_poly",
    "groebner_basis",
    "normal_form",
    "GroebnerBasis",
    "Ideal",
    "is_regular_sequence",
    "minimal_generators",
    "UnitIdealError",
    "codimension",
    "dimension",
    "HilbertSeries",
    "hilbert_series",
    "RingMap",
    "FourIntersection",
    "MultiplierError",
    "PhiCertificate",
    "PhiMap",
    "UnprojectionIdeal",
    "SpecializedUnprojection",
    "apply_phi",
    "base_unprojection",
    "build_four_intersection",
    "build_km_unprojection",
    "build_phi",
    "build_unprojection_ideal",
    "compute_multiplier",
    "km_phi_minors",
    "multiplier_minor_factorization",
    "specialize",
    "verify_phi",
    "BettiTable",
    "FAMILY_IDS",
    "FamilyInstance",
    "FanoFamilySpec",
    "StratumSpec",
    "UnknownFamilyError",
    "betti_consistency",
    "build_family",
    "ci_canonical_twist",
    "family_spec",
    "strata_check",
    "verify_family",
    "CheckResult",
    "generic_checks",
    "__version__",
]
