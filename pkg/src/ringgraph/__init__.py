"""Connectedness machinery for finitely presented commutative rings.

The package decides, for quotients of polynomial rings over Q or a
prime field, how the minimal primes of a presentation fit together:
the minimal-prime graph and its connectivity, the exhaustive
disconnecting-partition search, connectivity of punctured spectra
modulo an ideal, nonvanishing of top local cohomology, membership of
fractions in the S2-ification via conductor heights, and a randomized
harness checking punctured connectedness over face rings of simplicial
complexes.  Everything is exact, deterministic, and certificate-backed.
"""

from .errors import (
    PreconditionError,
    RingGraphError,
    SessionSyntaxError,
    StructuralError,
    UndecidedComponentError,
    ZerodivisorError,
)
from .fields import QQ, Field, PrimeField, RationalField, field_by_name
from .polynomials import (
    GREVLEX,
    LEX,
    MonomialOrder,
    Polynomial,
    PolyRing,
    elimination_order,
)
from .groebner import GroebnerBasis, buchberger, normal_form, s_polynomial
from .ideals import (
    HEIGHT_INFINITY,
    Flag,
    Ideal,
    PresentedRing,
    RingMap,
    contract,
    dimension,
    eliminate,
    height_in_quotient,
    ideal_colon,
    ideal_intersection,
    ideal_product,
    ideal_sum,
    is_m_primary,
    m_primary_status,
    polynomial_quotient,
    radical_membership,
    ring_map_kernel,
    saturation,
)
from .factor import certify_irreducible, exact_divide, factor_once
from .minprimes import (
    MinimalPrimeSet,
    PrimeCertificate,
    certify_equidimensional,
    certify_reduced_from_decomposition,
    ensure_min_primes,
    image_domain_presentation,
    is_equidimensional,
    j_ideal,
    j_ideal_is_zero,
    minimal_primes,
    monomial_minimal_primes,
    split_minimal_primes,
    top_dimensional_primes,
    verify_decomposition,
)
from .gamma import (
    ConnectivityReport,
    PrimeGraph,
    build_gamma,
    disconnection_exists,
    gamma_product,
    graph_from_text,
    hl_nonvanishing,
    is_connected,
    punctured_spectrum_connected,
)
from .complexes import (
    HarnessReport,
    SimplicialComplex,
    complex_from_lists,
    face_ring,
    facet_adjacency_graph,
    facet_min_primes,
    faltings_harness,
    is_pure,
    join,
    random_pure_connected_complex,
    sr_ideal,
)
from .s2 import ConductorResult, Fraction, conductor, s2_local_decision, s2_membership
from .session import SessionFile, parse_fraction, parse_polynomial, parse_session, print_session
from .reports import ReportDocument

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "GREVLEX",
    "LEX",
    "HEIGHT_INFINITY",
    "ConductorResult",
    "ConnectivityReport",
    "Field",
    "Flag",
    "Fraction",
    "GroebnerBasis",
    "HarnessReport",
    "Ideal",
    "MinimalPrimeSet",
    "MonomialOrder",
    "Polynomial",
    "PolyRing",
    "PreconditionError",
    "PresentedRing",
    "PrimeCertificate",
    "PrimeField",
    "PrimeGraph",
    "RationalField",
    "ReportDocument",
    "RingGraphError",
    "RingMap",
    "SessionFile",
    "SessionSyntaxError",
    "SimplicialComplex",
    "StructuralError",
    "UndecidedComponentError",
    "ZerodivisorError",
    "buchberger",
    "build_gamma",
    "certify_equidimensional",
    "certify_irreducible",
    "certify_reduced_from_decomposition",
    "complex_from_lists",
    "conductor",
    "contract",
    "dimension",
    "disconnection_exists",
    "eliminate",
    "elimination_order",
    "ensure_min_primes",
    "exact_divide",
    "face_ring",
    "facet_adjacency_graph",
    "facet_min_primes",
    "factor_once",
    "faltings_harness",
    "field_by_name",
    "gamma_product",
    "graph_from_text",
    "height_in_quotient",
    "hl_nonvanishing",
    "ideal_colon",
    "ideal_intersection",
    "ideal_product",
    "ideal_sum",
    "image_domain_presentation",
    "is_connected",
    "is_equidimensional",
    "is_m_primary",
    "is_pure",
    "j_ideal",
    "j_ideal_is_zero",
    "join",
    "m_primary_status",
    "minimal_primes",
    "monomial_minimal_primes",
    "normal_form",
    "parse_fraction",
    "parse_polynomial",
    "parse_session",
    "polynomial_quotient",
    "print_session",
    "punctured_spectrum_connected",
    "radical_membership",
    "random_pure_connected_complex",
    "ring_map_kernel",
    "s2_local_decision",
    "s2_membership",
    "s_polynomial",
    "saturation",
    "split_minimal_primes",
    "sr_ideal",
    "top_dimensional_primes",
    "verify_decomposition",
]
