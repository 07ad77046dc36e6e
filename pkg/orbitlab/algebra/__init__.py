"""
Exact root-system, Weyl group and orbit-descriptor calculus.
"""

from orbitlab.algebra.orbit_calculus import (
    BetaSystem,
    BoundaryPair,
    DeltaSplit,
    GammaSystem,
    OrbitDescriptor,
    SeparationCertificate,
    boundary_orbit_s1,
    boundary_orbit_s2,
    boundary_pair_report,
    certify_nonclosed,
    choose_beta_system,
    enumerate_gamma_systems,
    is_holomorphic_type,
    make_descriptor,
    mirror_descriptor,
    normalize_descriptor,
    phi_image,
    separation_inequality,
    split_delta12,
)
from orbitlab.algebra.roots import Root, RootSubset, RootSystem, build_root_system
from orbitlab.algebra.weyl import ParabolicSubgroup, WeylElement, enumerate_parabolic, reflection

__all__ = [
    "Root",
    "RootSubset",
    "RootSystem",
    "build_root_system",
    "WeylElement",
    "ParabolicSubgroup",
    "enumerate_parabolic",
    "reflection",
    "GammaSystem",
    "OrbitDescriptor",
    "BetaSystem",
    "DeltaSplit",
    "SeparationCertificate",
    "BoundaryPair",
    "make_descriptor",
    "certify_nonclosed",
    "normalize_descriptor",
    "choose_beta_system",
    "split_delta12",
    "boundary_orbit_s1",
    "boundary_orbit_s2",
    "mirror_descriptor",
    "boundary_pair_report",
    "phi_image",
    "separation_inequality",
    "is_holomorphic_type",
    "enumerate_gamma_systems",
]
