"""
Complex dimensions of K_C-orbits on Sp(2,C)/B by tangent-space rank.
"""

import itertools

import numpy as np

from orbitlab.core.exceptions import ValidationError
from orbitlab.core.logging import get_logger
from orbitlab.sp2.flags import Flag4, flag_of
from orbitlab.sp2.labels import KC_LABELS, OrbitLabel
from orbitlab.sp2.linalg import numerical_rank, orthonormal_basis
from orbitlab.sp2.matrices import representative

logger = get_logger("sp2.dimensions")


def kc_lie_basis() -> list[np.ndarray]:
    """diag(E_ij, -E_ji), i, j in {1, 2}: a basis of Lie(K_C) = gl(2,C)."""
    basis = []
    for i, j in itertools.product(range(2), repeat=2):
        e = np.zeros((2, 2), dtype=complex)
        e[i, j] = 1.0
        # d/dt k_hat(exp(tE)) at t = 0
        basis.append(np.block([[e, np.zeros((2, 2))], [np.zeros((2, 2)), -e.T]]))
    return basis


def tangent_map(f: Flag4) -> np.ndarray:
    """
    Matrix of X -> ((I - vv^H) X v, (I - QQ^H) X Q) on Lie(K_C).

    Rows are the 4 + 8 coordinates of the tangent vector to P^3 x Gr(2, 4);
    columns run over kc_lie_basis().
    """
    v = f.v1 / np.linalg.norm(f.v1)
    q = orthonormal_basis(f.v2)
    line_projector = np.eye(4) - np.outer(v, v.conj())
    plane_projector = np.eye(4) - q @ q.conj().T
    columns = [
        np.concatenate([line_projector @ x @ v, (plane_projector @ x @ q).reshape(-1)])
        for x in kc_lie_basis()
    ]
    return np.column_stack(columns)


def flag_orbit_dimension(f: Flag4) -> int:
    """
    Raises:
        DegenerateError: If the tangent rank is numerically unstable
    """
    return numerical_rank(tangent_map(f), what="K_C tangent map")


def orbit_dimension(label: OrbitLabel) -> int:
    """Complex dimension of the K_C-orbit named by label, through its table representative."""
    if label.side != "KC":
        raise ValidationError(f"Orbit dimensions are computed for K_C-orbits, got {label}")
    dimension = flag_orbit_dimension(flag_of(representative(label)))
    logger.debug(f"dim {label} = {dimension}")
    return dimension


def all_dimensions() -> dict[OrbitLabel, int]:
    return {label: orbit_dimension(label) for label in KC_LABELS}

