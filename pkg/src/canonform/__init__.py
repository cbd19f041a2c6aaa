"""Exact matrix canonical forms over Z, Q and Q[x]: Hermite, Smith,
rational and Jordan forms with unimodular transform certificates."""

from .domain import (
    Elem,
    Ring,
    canonical_associate,
    canonical_residue,
    egcd,
    factor,
    gcd,
    integer,
    lcm,
    monomial,
    parse_scalar,
    polynomial,
    rational,
    valuation,
)
from .matrix import Matrix, mat_q, mat_qx, mat_z, parse_matrix, vector
from .determinant import det, det_expansion, rank_by_minors
from .hermite import HermiteResult, hermite_canonical, solve
from .smith import SmithResult, smith
from .invariants import InvariantReport, equivalent, invariant_report
from .similarity import (
    SimilarityCertificate,
    char_poly,
    companion,
    hypercompanion,
    jordan,
    minimal_poly,
    rcf,
    similar,
)

__all__ = [
    "Elem",
    "Ring",
    "Matrix",
    "HermiteResult",
    "SmithResult",
    "InvariantReport",
    "SimilarityCertificate",
    "canonical_associate",
    "canonical_residue",
    "char_poly",
    "companion",
    "det",
    "det_expansion",
    "egcd",
    "equivalent",
    "factor",
    "gcd",
    "hermite_canonical",
    "hypercompanion",
    "integer",
    "invariant_report",
    "jordan",
    "lcm",
    "mat_q",
    "mat_qx",
    "mat_z",
    "minimal_poly",
    "monomial",
    "parse_matrix",
    "parse_scalar",
    "polynomial",
    "rank_by_minors",
    "rational",
    "rcf",
    "similar",
    "smith",
    "solve",
    "valuation",
    "vector",
]
