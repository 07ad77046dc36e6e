"""
Flags (V1, V2) in C^4 with V2 isotropic, and their K_C- and G_R-orbit labels.

gB is identified with (C g e1, g U_+). K_C-orbits are told apart by the
dimensions of V1, V2 meeting U_+ and U_-, plus the scalar v^T J tau(v).
G_R-orbits are told apart by the Hermitian signatures of V1 and V2 and, for
a null line V1, by whether the hyperplanes v^J and v^perp coincide (C_0^s)
or not (C_0^r).
"""

from dataclasses import dataclass

import numpy as np

from orbitlab.core.config import get_settings
from orbitlab.core.exceptions import DegenerateError, ValidationError
from orbitlab.core.logging import get_logger
from orbitlab.sp2.labels import OrbitLabel, gr, kc
from orbitlab.sp2.linalg import (
    GramSignature,
    gram_signature,
    intersection_dimension,
    is_zero,
    numerical_rank,
    sign_of,
)
from orbitlab.sp2.matrices import H, J, TAU, U_MINUS, U_PLUS, check_symplectic

logger = get_logger("sp2.flags")


@dataclass(frozen=True, eq=False)
class Flag4:
    """V1 = C v1 inside V2 = column span of the 4x2 matrix v2."""

    v1: np.ndarray
    v2: np.ndarray

    def __post_init__(self):
        v1 = np.asarray(self.v1, dtype=complex).reshape(4)
        v2 = np.asarray(self.v2, dtype=complex).reshape(4, 2)
        object.__setattr__(self, "v1", v1)
        object.__setattr__(self, "v2", v2)

    def validate(self, tol: float | None = None) -> "Flag4":
        """
        Raises:
            ValidationError: If V2 is not a rank-2 isotropic plane containing v1
        """
        tol = tol if tol is not None else get_settings().scalar_tol
        if np.linalg.norm(self.v1) == 0:
            raise ValidationError("v1 must be nonzero")
        if numerical_rank(self.v2, what="V2") != 2:
            raise ValidationError("V2 must have rank 2")
        if numerical_rank(np.column_stack([self.v2, self.v1]), what="V2 + v1") != 2:
            raise ValidationError("v1 must lie in V2")
        scale = np.linalg.norm(self.v2) ** 2
        if abs(self.v2[:, 0] @ J @ self.v2[:, 1]) > tol * scale:
            raise ValidationError("V2 is not isotropic")
        return self


def flag_of(g: np.ndarray) -> Flag4:
    """(C g e1, g U_+)."""
    g = check_symplectic(g)
    return Flag4(v1=g[:, 0], v2=g[:, :2])


def kc_invariants(f: Flag4, tol: float | None = None) -> dict[str, int | bool]:
    """dim(V1 meet U+-), dim(V2 meet U+-) and whether v^T J tau(v) vanishes."""
    v = f.v1 / np.linalg.norm(f.v1)
    q = v @ J @ TAU @ v
    return {
        "a": intersection_dimension(v, U_PLUS, "V1 meet U+"),
        "b": intersection_dimension(v, U_MINUS, "V1 meet U-"),
        "c": intersection_dimension(f.v2, U_PLUS, "V2 meet U+"),
        "d": intersection_dimension(f.v2, U_MINUS, "V2 meet U-"),
        "q_zero": is_zero(q, tol, what="v^T J tau(v)"),
    }


def classify_kc(f: Flag4, tol: float | None = None) -> OrbitLabel:
    """
    K_C-orbit of a flag.

    Raises:
        DegenerateError: If a rank or scalar decision is ambiguous
    """
    inv = kc_invariants(f, tol)
    a, b, c, d = inv["a"], inv["b"], inv["c"], inv["d"]

    if c == 2:
        return kc(1)
    if d == 2:
        return kc(2)
    if c == 1 and d == 1:
        if a:
            return kc(3)
        if b:
            return kc(4)
        return kc(7)
    if c == 1 and d == 0:
        return kc(5) if a else kc(8)
    if c == 0 and d == 1:
        return kc(6) if b else kc(9)
    if c == 0 and d == 0:
        return kc(10) if inv["q_zero"] else kc("op")
    raise DegenerateError("Inconsistent K_C invariants", inv)


def hermitian_norm_sign(v: np.ndarray, tol: float | None = None) -> int:
    """Sign of (v, v)/|v|^2 for the U(2,2) form."""
    value = float(np.real(v.conj() @ H @ v) / np.real(v.conj() @ v))
    return sign_of(value, tol, what="(v,v)")


def is_s_type(v: np.ndarray) -> bool:
    """True iff the hyperplanes v^J and v^perp coincide (v in C_0^s)."""
    covectors = np.vstack([v @ J, v.conj() @ H])
    return numerical_rank(covectors, what="v^J, v^perp") == 1


def gr_invariants(f: Flag4, tol: float | None = None) -> tuple[int, bool | None, GramSignature]:
    v = f.v1 / np.linalg.norm(f.v1)
    h1 = hermitian_norm_sign(v, tol)
    s_type = is_s_type(v) if h1 == 0 else None
    return h1, s_type, gram_signature(f.v2, H, tol)


def classify_gr(f: Flag4, tol: float | None = None) -> OrbitLabel:
    """
    G_R-orbit of a flag.

    Raises:
        DegenerateError: If a decision is ambiguous or the invariants are inconsistent
    """
    h1, s_type, sig = gr_invariants(f, tol)
    pqz = sig.as_tuple()

    if pqz == (2, 0, 0):
        return gr(1)
    if pqz == (0, 2, 0):
        return gr(2)
    if h1 > 0:
        if pqz == (1, 1, 0):
            return gr(3)
        if pqz == (1, 0, 1):
            return gr(5)
    elif h1 < 0:
        if pqz == (1, 1, 0):
            return gr(4)
        if pqz == (0, 1, 1):
            return gr(6)
    elif s_type is False:
        return gr(10) if sig.z == 2 else gr(7)
    else:
        if sig.z == 2:
            return gr("op")
        if sig.p >= 1:
            return gr(8)
        if sig.q >= 1:
            return gr(9)
    raise DegenerateError(
        "Inconsistent G_R invariants",
        {"h1": h1, "s_type": s_type, "signature": str(sig)},
    )


def classify(f: Flag4, tol: float | None = None) -> tuple[OrbitLabel, OrbitLabel]:
    return classify_kc(f, tol), classify_gr(f, tol)
