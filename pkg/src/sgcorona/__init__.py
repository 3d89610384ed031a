"""Exact spectral toolkit for corona-type products of signed graphs."""

from .core import (
    CoRegularity,
    DegreeProfile,
    SignedGraph,
    canonical_marking,
    co_regularity,
    degree_profile,
    is_balanced,
    plurality_marking,
    resolve_marking,
    switch,
)
from .coronal import coronal, coronal_coregular, coronal_star
from .exactalg import (
    ExactMatrix,
    IntPolynomial,
    RationalFn,
    charpoly_exact,
    det_exact,
    eigenvalues_sym,
    poly_compose_projective,
    resolvent_quadratic_form,
)
from .graphio import load_signed_graph, parse_signed_graph, serialize_signed_graph
from .matrices import MatrixKind, build_matrix
from .orientation import (
    OrientedGraph,
    ROrientation,
    default_orientation,
    incidence_matrix,
    line_graph,
    oriented,
    random_orientation,
    subdivision,
)
from .products import Layout, ProductKind, ProductResult, build_product
from .spectra import (
    VerificationReport,
    charpoly_edge_corona,
    charpoly_normalized,
    charpoly_senc,
    charpoly_svnc,
    closed_charpoly,
    verify_theorem,
)
from .structural import (
    BalanceVerdict,
    EdgeCensus,
    OrientationCensus,
    TriadCensus,
    balance_of_product,
    census_report,
    count_triads,
    orientation_census,
    predict_census,
    predict_census_as_published,
)
from .cospectral import (
    PairCertificate,
    SpectralKey,
    canonical_form,
    catalog_lines,
    certify_pair,
    enumerate_signed_graphs,
    find_coronal_pairs,
    products_distinct,
    spectral_key,
)

__version__ = "0.1.0"

__all__ = [
    "BalanceVerdict",
    "CoRegularity",
    "DegreeProfile",
    "EdgeCensus",
    "ExactMatrix",
    "IntPolynomial",
    "Layout",
    "MatrixKind",
    "OrientationCensus",
    "OrientedGraph",
    "PairCertificate",
    "ProductKind",
    "ProductResult",
    "ROrientation",
    "RationalFn",
    "SignedGraph",
    "SpectralKey",
    "TriadCensus",
    "VerificationReport",
    "balance_of_product",
    "build_matrix",
    "build_product",
    "canonical_form",
    "canonical_marking",
    "catalog_lines",
    "census_report",
    "certify_pair",
    "charpoly_edge_corona",
    "charpoly_exact",
    "charpoly_normalized",
    "charpoly_senc",
    "charpoly_svnc",
    "closed_charpoly",
    "co_regularity",
    "coronal",
    "coronal_coregular",
    "coronal_star",
    "count_triads",
    "default_orientation",
    "degree_profile",
    "det_exact",
    "eigenvalues_sym",
    "enumerate_signed_graphs",
    "find_coronal_pairs",
    "incidence_matrix",
    "is_balanced",
    "line_graph",
    "load_signed_graph",
    "orientation_census",
    "oriented",
    "parse_signed_graph",
    "plurality_marking",
    "poly_compose_projective",
    "predict_census",
    "predict_census_as_published",
    "products_distinct",
    "random_orientation",
    "resolve_marking",
    "resolvent_quadratic_form",
    "serialize_signed_graph",
    "spectral_key",
    "subdivision",
    "switch",
    "verify_theorem",
]
