"""
Numerical laboratory for Sp(2,R): K_C- and G_R-orbits on Sp(2,C)/B.
"""

from orbitlab.sp2.flags import Flag4, classify, classify_gr, classify_kc, flag_of
from orbitlab.sp2.labels import GR_LABELS, KC_LABELS, OrbitLabel, gr, kc
from orbitlab.sp2.search import CLAIMS, Target, Witness, intersection_search, search_claim
from orbitlab.sp2.table import DualityReport, verify_duality_table

__all__ = [
    "Flag4",
    "flag_of",
    "classify",
    "classify_kc",
    "classify_gr",
    "OrbitLabel",
    "KC_LABELS",
    "GR_LABELS",
    "kc",
    "gr",
    "CLAIMS",
    "Target",
    "Witness",
    "intersection_search",
    "search_claim",
    "DualityReport",
    "verify_duality_table",
]
