"""Reidemeister spectra: classification of theta, closed forms, and enumeration."""

from .catalog import (
    DOCUMENTED_DISCREPANCIES, PROOF, STATED, ClosedFormSpec, catalog_clauses,
    closed_form, spectrum_membership,
)
from .centralizer import (
    SPEC_INF_ONLY, SPEC_TWO_AND_INF, QDecision, decide_Q_spectrum,
    twisted_centralizer_basis,
)
from .classify import ANTIDIAG, DIAG, GENERAL, IDENTITY, SCALAR, ThetaCase, classify_theta
from .enumerate import (
    EnumBound, SpectrumReport, UnsupportedTheta, VariantComparison,
    enumerate_spectrum,
)

__all__ = [
    "ClosedFormSpec", "closed_form", "catalog_clauses", "spectrum_membership",
    "DOCUMENTED_DISCREPANCIES", "STATED", "PROOF",
    "SPEC_INF_ONLY", "SPEC_TWO_AND_INF", "QDecision", "decide_Q_spectrum",
    "twisted_centralizer_basis",
    "ThetaCase", "classify_theta", "SCALAR", "DIAG", "ANTIDIAG", "IDENTITY", "GENERAL",
    "EnumBound", "SpectrumReport", "UnsupportedTheta", "VariantComparison",
    "enumerate_spectrum",
]
