"""
Boundary strata of the domain D in Sp(2,C)/K_C.

A point xK_C is recorded by the pair of isotropic planes (xU_+, xU_-). The
closure of G_R Q/Q is stratified by the Hermitian signature of xU_+:
interior (2,0,0), codimension one (1,0,1) and the deepest stratum (0,0,2).
The Q-bar side is read with the opposite form. The signature rule is only
meaningful for planes constructed inside that closure.
"""

from enum import IntEnum

import numpy as np

from orbitlab.core.exceptions import ValidationError, VerificationError
from orbitlab.core.logging import get_logger
from orbitlab.sp2.linalg import gram_signature, numerical_rank
from orbitlab.sp2.matrices import H, J, U_MINUS, U_PLUS, bar, siegel_lower

logger = get_logger("sp2.strata")


class Stratum(IntEnum):
    OUTSIDE = -1
    INTERIOR = 0
    CODIM_ONE = 1
    DEEPEST = 2


_BY_SIGNATURE = {
    (2, 0, 0): Stratum.INTERIOR,
    (1, 0, 1): Stratum.CODIM_ONE,
    (0, 0, 2): Stratum.DEEPEST,
}


def stratum_of_plane(v: np.ndarray, tol: float | None = None, sign: int = 1) -> Stratum:
    """
    Stratum of an isotropic plane under the form sign * H.

    Raises:
        ValidationError: If the plane is not an isotropic rank-2 4x2 matrix
        DegenerateError: Near a signature boundary
    """
    v = np.asarray(v, dtype=complex)
    if v.shape != (4, 2) or numerical_rank(v, what="plane") != 2:
        raise ValidationError("Expected a rank-2 4x2 matrix")
    if abs(v[:, 0] @ J @ v[:, 1]) > 1e-8 * np.linalg.norm(v) ** 2:
        raise ValidationError("Plane is not isotropic")
    return _BY_SIGNATURE.get(gram_signature(v, sign * H, tol).as_tuple(), Stratum.OUTSIDE)


def boundary_point(s2: float = 0.0, mirror: bool = False) -> np.ndarray:
    """
    A point with xU_+ in the codimension-one stratum and xU_- interior.

    x = [[I, 0], [C, I]] with C = diag(1, tan s2), so that
    xU_+ = c_beta1 t_2(s2) U_+ and xU_- = U_-. With mirror=True the
    conjugate point is returned, which swaps the roles of the two sides.

    Raises:
        ValidationError: If |s2| >= pi/4
    """
    if not -np.pi / 4 < s2 < np.pi / 4:
        raise ValidationError(f"s2 must lie in (-pi/4, pi/4), got {s2}")
    x = siegel_lower(np.diag([1.0, np.tan(s2)]).astype(complex))
    if mirror:
        x = bar(x)

    strata = boundary_strata(x)
    expected = (Stratum.INTERIOR, Stratum.CODIM_ONE) if mirror else (Stratum.CODIM_ONE, Stratum.INTERIOR)
    if strata != expected:
        raise VerificationError("Boundary point left its stratum", {"strata": [int(s) for s in strata], "s2": s2})
    return x


def boundary_strata(x: np.ndarray, tol: float | None = None) -> tuple[Stratum, Stratum]:
    """(stratum of xU_+ under H, stratum of xU_- under -H)."""
    return stratum_of_plane(x @ U_PLUS, tol), stratum_of_plane(x @ U_MINUS, tol, sign=-1)


def in_domain(x: np.ndarray, tol: float | None = None) -> bool:
    """True iff xU_+ - {0} lies in C_+ and xU_- - {0} lies in C_-."""
    return boundary_strata(x, tol) == (Stratum.INTERIOR, Stratum.INTERIOR)
