"""Circular and (k,d)-colorings of signed graphs."""

from .arith import circ_dist, format_ratio, mod_rem, parse_ratio, residue_orbit
from .coloring import (
    KDColoring,
    RColoring,
    Violation,
    missing_inverse_pairs,
    verify_kd,
    verify_r,
)
from .sgraph import (
    SignedGraph,
    is_antibalanced,
    is_balanced,
    is_equivalent,
    normalize,
    switch,
)
from .solve import chi, chi_c, chi_pm, feasible, report

__all__ = [
    "KDColoring", "RColoring", "SignedGraph", "Violation",
    "chi", "chi_c", "chi_pm", "circ_dist", "feasible", "format_ratio",
    "is_antibalanced", "is_balanced", "is_equivalent", "missing_inverse_pairs",
    "mod_rem", "normalize", "parse_ratio", "report", "residue_orbit", "switch",
    "verify_kd", "verify_r",
]
