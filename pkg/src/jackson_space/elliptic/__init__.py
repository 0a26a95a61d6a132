"""Elliptic-curve reduction data at l = p and the algebras attached to it."""

from .curves import (
    CurveReductionData,
    additive_torsion_test,
    allowed_d_additive,
    conductor_of_type,
    curve_torsion_test,
    discriminant,
    exclusion_check,
    fixture_checks,
    fixture_dir,
    fixture_labels,
    load_curve,
    normalize_model,
    ogg_check,
    valuation,
)
from .fibre import (
    NFamily,
    QuantumPlaneQuotient,
    ThetaVector,
    brauer_class,
    build_n_family,
    build_special_fibre,
    residue_root,
    theta_hyperplane,
)
from .report import analyze_curve, render_report

__all__ = [
    "CurveReductionData", "additive_torsion_test", "allowed_d_additive", "conductor_of_type",
    "curve_torsion_test", "discriminant", "exclusion_check", "fixture_checks", "fixture_dir",
    "fixture_labels", "load_curve", "normalize_model", "ogg_check", "valuation",
    "NFamily", "QuantumPlaneQuotient", "ThetaVector", "brauer_class", "build_n_family",
    "build_special_fibre", "residue_root", "theta_hyperplane", "analyze_curve", "render_report",
]
