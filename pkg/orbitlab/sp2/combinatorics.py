"""
Bridge between C_2 orbit descriptors and Sp(2,C) matrices.

A descriptor (gamma_1..gamma_k, w) of type C_2 is realized as the matrix
c_{gamma_1}...c_{gamma_k} w_lift and named by classifying its flag. This is
how the exact boundary-orbit calculus is checked against the table.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from orbitlab.algebra.orbit_calculus import (
    OrbitDescriptor,
    boundary_orbit_s1,
    boundary_orbit_s2,
    certify_nonclosed,
    is_holomorphic_type,
    make_descriptor,
)
from orbitlab.algebra.roots import Root, RootSystem, build_root_system
from orbitlab.algebra.weyl import WeylElement
from orbitlab.core.exceptions import ValidationError, VerificationError
from orbitlab.core.logging import get_logger
from orbitlab.sp2.flags import classify_kc, flag_of
from orbitlab.sp2.labels import KC_LABELS, OrbitLabel, kc
from orbitlab.sp2.matrices import cayley_element, weyl_lift

logger = get_logger("sp2.combinatorics")

# label -> (gammas, w as one-based signed images)
_SYMBOLIC_TABLE: dict[str, tuple[tuple[str, ...], str]] = {
    "1": ((), "1,2"),
    "2": ((), "-1,-2"),
    "3": ((), "1,-2"),
    "4": ((), "-1,2"),
    "5": (("2e2",), "1,2"),
    "6": (("2e2",), "-1,2"),
    "7": (("e1+e2",), "1,-2"),
    "8": (("2e1",), "1,2"),
    "9": (("2e1",), "1,-2"),
    "10": (("e1+e2",), "1,2"),
    "op": (("2e1", "2e2"), "1,2"),
}

EXPECTED_S1 = {kc(8): kc(1), kc(9): kc(3), kc("op"): kc(5), kc(7): kc(3), kc(10): kc(5)}
EXPECTED_S2 = {kc(8): kc(4), kc(9): kc(2), kc("op"): kc(6), kc(7): kc(4), kc(10): kc(6)}


@lru_cache(maxsize=1)
def sp2_root_system() -> RootSystem:
    """C_2 with Z = (1, 1)."""
    return build_root_system("C", 2)


def descriptor_of(label: OrbitLabel) -> OrbitDescriptor:
    """Symbolic descriptor (Theta empty) of the K_C-orbit named by label."""
    if label.side != "KC":
        raise ValidationError(f"Descriptors name K_C-orbits, got {label}")
    rs = sp2_root_system()
    gammas, w = _SYMBOLIC_TABLE[label.index]
    return make_descriptor(rs, [Root.parse(g, 2) for g in gammas], WeylElement.parse(w, 2))


def descriptor_matrix(d: OrbitDescriptor) -> np.ndarray:
    """
    Raises:
        ValidationError: If d is not of type C_2 or carries a nonempty Theta
    """
    rs = d.root_system
    if rs.family != "C" or rs.rank != 2:
        raise ValidationError(f"Matrix realization needs C_2, got {rs}")
    if d.theta:
        raise ValidationError("Matrix realization is for K_C-B descriptors (empty Theta)")
    g = np.eye(4, dtype=complex)
    for gamma in d.effective_gammas:
        g = g @ cayley_element(gamma)
    return g @ weyl_lift(d.w)


def descriptor_label(d: OrbitDescriptor, tol: float | None = None) -> OrbitLabel:
    return classify_kc(flag_of(descriptor_matrix(d)), tol)


@dataclass(frozen=True)
class BoundaryLabels:
    source: OrbitLabel
    s1: OrbitLabel
    s2: OrbitLabel
    s1_descriptor: OrbitDescriptor
    s2_descriptor: OrbitDescriptor

    @property
    def distinct(self) -> bool:
        return self.s1 != self.s2


def boundary_labels(label: OrbitLabel) -> BoundaryLabels:
    """
    Both boundary orbits of a non-closed K_C-orbit, computed symbolically and named by classification.

    Raises:
        NotNonClosedError: For the closed orbits S1..S4
    """
    d = descriptor_of(label)
    s1 = boundary_orbit_s1(d)
    s2 = boundary_orbit_s2(d)
    result = BoundaryLabels(label, descriptor_label(s1), descriptor_label(s2), s1, s2)
    logger.debug(f"{label}: S1~ = {result.s1} ({s1}), S2~ = {result.s2} ({s2})")
    return result


def nonclosed_labels() -> list[OrbitLabel]:
    return [label for label in KC_LABELS if certify_nonclosed(descriptor_of(label)) is not None]


def holomorphic_labels() -> list[OrbitLabel]:
    return [label for label in KC_LABELS if is_holomorphic_type(descriptor_of(label))]


def verify_descriptor_table() -> dict[OrbitLabel, OrbitLabel]:
    """
    Raises:
        VerificationError: If a symbolic descriptor does not realize its own label
    """
    realized = {label: descriptor_label(descriptor_of(label)) for label in KC_LABELS}
    wrong = {str(k): str(v) for k, v in realized.items() if k != v}
    if wrong:
        raise VerificationError("Descriptor table does not match the classifier", {"mismatches": wrong})
    return realized


def verify_boundary_consistency() -> dict[OrbitLabel, BoundaryLabels]:
    """
    Check S1~ and S2~ of the five claim orbits against the expected labels.

    Raises:
        VerificationError: On any disagreement
    """
    report = {label: boundary_labels(label) for label in EXPECTED_S1}
    wrong = {
        str(label): {"s1": str(r.s1), "s2": str(r.s2)}
        for label, r in report.items()
        if (r.s1, r.s2) != (EXPECTED_S1[label], EXPECTED_S2[label])
    }
    if wrong:
        raise VerificationError("Boundary orbits disagree with the claims", {"mismatches": wrong})
    return report
