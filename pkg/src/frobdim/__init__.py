"""Frobenius vanishing tests for flat and injective dimension.

The package decides finiteness of homological dimensions of finitely
presented graded modules over quotients of polynomial rings in prime
characteristic, by computing Tor and Ext against Frobenius pushforwards
and applying the published vanishing criteria, with an independent
resolution-based oracle for cross-checking.
"""

from .criteria import (
    CriterionConfig,
    Verdict,
    decide_flat_dimension,
    decide_injectivity_zero_dim,
)
from .errors import FrobdimError, ParseError, ResourceLimitExceeded
from .frobenius import (
    FrobeniusPresentation,
    TorTable,
    ext_frobenius,
    frobenius_twist,
    pushforward_presentation,
    tor_frobenius,
    tor_frobenius_via_pushforward,
)
from .groebner import (
    DEFAULT_STEP_BUDGET,
    GroebnerBasis,
    StepBudget,
    groebner_basis,
    minimal_generating_subset,
    normal_form,
    standard_monomials,
    syzygy_basis,
)
from .polynomials import (
    GREVLEX,
    LEX,
    FieldContext,
    FreeVector,
    Monomial,
    MonomialOrder,
    Polynomial,
    PolyRing,
    poly_mul,
    poly_parse,
    poly_qpower,
    q_basis_decompose,
)
from .resolutions import (
    FreeComplex,
    PresentedModule,
    ext_module,
    finite_length_dual,
    homology_is_zero,
    minimal_free_resolution,
    projective_dimension_oracle,
)
from .rings import QuotientRing, RingInvariants, hilbert_numerator, ring_profile

__version__ = "0.1.0"

__all__ = [
    "FrobdimError",
    "ParseError",
    "ResourceLimitExceeded",
    "GREVLEX",
    "LEX",
    "FieldContext",
    "FreeVector",
    "Monomial",
    "MonomialOrder",
    "Polynomial",
    "PolyRing",
    "poly_mul",
    "poly_parse",
    "poly_qpower",
    "q_basis_decompose",
    "DEFAULT_STEP_BUDGET",
    "GroebnerBasis",
    "StepBudget",
    "groebner_basis",
    "minimal_generating_subset",
    "normal_form",
    "standard_monomials",
    "syzygy_basis",
    "QuotientRing",
    "RingInvariants",
    "hilbert_numerator",
    "ring_profile",
    "FreeComplex",
    "PresentedModule",
    "ext_module",
    "finite_length_dual",
    "homology_is_zero",
    "minimal_free_resolution",
    "projective_dimension_oracle",
    "FrobeniusPresentation",
    "TorTable",
    "ext_frobenius",
    "frobenius_twist",
    "pushforward_presentation",
    "tor_frobenius",
    "tor_frobenius_via_pushforward",
    "CriterionConfig",
    "Verdict",
    "decide_flat_dimension",
    "decide_injectivity_zero_dim",
    "__version__",
]
