"""
Explicit elements of Sp(2,C) = {g in GL(4,C) | g^T J g = J}.

Real form G_R = Sp(2,C) meet U(2,2), where U(2,2) preserves the Hermitian form
(w, z) = w^H H z with H = diag(1, 1, -1, -1). K_C = GL(2,C) sits inside as
block-diagonal matrices diag(k, k^-T).
"""

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import block_diag, expm

from orbitlab.algebra.roots import Root
from orbitlab.algebra.weyl import WeylElement
from orbitlab.core.config import get_settings
from orbitlab.core.exceptions import ValidationError
from orbitlab.sp2.labels import OrbitLabel, kc

I2 = np.eye(2, dtype=complex)
Z2 = np.zeros((2, 2), dtype=complex)

J = np.block([[Z2, -I2], [I2, Z2]])
H = np.diag([1.0, 1.0, -1.0, -1.0]).astype(complex)
TAU = np.diag([1.0, 1.0, -1.0, -1.0]).astype(complex)

U_PLUS = np.eye(4, dtype=complex)[:, :2]
U_MINUS = np.eye(4, dtype=complex)[:, 2:]


def unit_matrix(i: int, j: int) -> np.ndarray:
    """E_ij with 1-based indices."""
    e = np.zeros((4, 4), dtype=complex)
    e[i - 1, j - 1] = 1.0
    return e


X_BETA1 = unit_matrix(3, 1) - unit_matrix(1, 3)
X_BETA2 = unit_matrix(4, 2) - unit_matrix(2, 4)
X_DELTA = -(unit_matrix(1, 4) + unit_matrix(2, 3))
Y_DELTA = X_DELTA - X_DELTA.conj().T

# Lower nilpotent direction pushing U_+ toward the null cone: N^2 = 0
N_DELTA = unit_matrix(4, 1) + unit_matrix(3, 2)


def t1(s: float) -> np.ndarray:
    return expm(s * X_BETA1)


def t2(s: float) -> np.ndarray:
    return expm(s * X_BETA2)


C_BETA1 = t1(np.pi / 4)
C_BETA2 = t2(np.pi / 4)
W_BETA1 = t1(np.pi / 2)
W_BETA2 = t2(np.pi / 2)
C_DELTA = expm(np.pi / 4 * Y_DELTA)


def symplectic_defect(g: np.ndarray) -> float:
    """|g^T J g - J| relative to max(1, |g|^2)."""
    scale = max(1.0, float(np.linalg.norm(g)) ** 2)
    return float(np.linalg.norm(g.T @ J @ g - J)) / scale


def is_symplectic(g: np.ndarray, tol: float | None = None) -> bool:
    tol = tol if tol is not None else get_settings().symplectic_tol
    return symplectic_defect(g) <= tol


def check_symplectic(g: np.ndarray, tol: float | None = None) -> np.ndarray:
    """
    Raises:
        ValidationError: If g is not a 4x4 symplectic matrix within tol
    """
    g = np.asarray(g, dtype=complex)
    if g.shape != (4, 4):
        raise ValidationError(f"Expected a 4x4 matrix, got shape {g.shape}")
    if not is_symplectic(g, tol):
        raise ValidationError(f"Matrix is not symplectic (defect {symplectic_defect(g):.3e})")
    return g


def bar(g: np.ndarray) -> np.ndarray:
    """Conjugation of Sp(2,C) with respect to Sp(2,R) = Sp(2,C) meet U(2,2)."""
    return H @ np.linalg.inv(g.conj().T) @ H


def bar_lie(x: np.ndarray) -> np.ndarray:
    return -H @ x.conj().T @ H


def theta(g: np.ndarray) -> np.ndarray:
    """Cartan involution: conjugation by diag(I, -I)."""
    return TAU @ g @ TAU


def k_hat(k: np.ndarray) -> np.ndarray:
    """Embed k in GL(2,C) as diag(k, k^-T) in K_C."""
    k = np.asarray(k, dtype=complex)
    return block_diag(k, np.linalg.inv(k).T)


def siegel_unipotent(s: np.ndarray) -> np.ndarray:
    """[[I, S], [0, I]] for symmetric S."""
    return np.block([[I2, s], [Z2, I2]])


def siegel_lower(c: np.ndarray) -> np.ndarray:
    """[[I, 0], [C, I]] for symmetric C."""
    return np.block([[I2, Z2], [c, I2]])


def weyl_lift(w: WeylElement) -> np.ndarray:
    """
    Permutation matrix of a signed permutation of C_2.

    e_i -> e_{p(i)} (s_i = +1) or e_{p(i)+2} (s_i = -1), and
    e_{i+2} -> e_{p(i)+2} (s_i = +1) or -e_{p(i)} (s_i = -1).
    """
    if w.rank != 2:
        raise ValidationError(f"Weyl lift is defined for rank 2, got rank {w.rank}")
    g = np.zeros((4, 4), dtype=complex)
    for i, (p, s) in enumerate(zip(w.perm, w.signs)):
        if s > 0:
            g[p, i] = 1.0
            g[p + 2, i + 2] = 1.0
        else:
            g[p + 2, i] = 1.0
            g[p, i + 2] = -1.0
    return g


_CAYLEY = {
    (2, 0): C_BETA1,
    (0, 2): C_BETA2,
    (1, 1): C_DELTA,
}


def cayley_element(root: Root) -> np.ndarray:
    """c_gamma for a noncompact positive root of C_2 (2e1, 2e2 or e1+e2)."""
    key = tuple(int(c) for c in root.coords)
    if key not in _CAYLEY:
        raise ValidationError(f"No Cayley element for {root}")
    return _CAYLEY[key]


TABLE: dict[OrbitLabel, tuple[str, np.ndarray]] = {
    kc(1): ("e", np.eye(4, dtype=complex)),
    kc(2): ("w_beta1 w_beta2", W_BETA1 @ W_BETA2),
    kc(3): ("w_beta2", W_BETA2),
    kc(4): ("w_beta1", W_BETA1),
    kc(5): ("c_beta2", C_BETA2),
    kc(6): ("c_beta2 w_beta1", C_BETA2 @ W_BETA1),
    kc(7): ("c_delta w_beta2", C_DELTA @ W_BETA2),
    kc(8): ("c_beta1", C_BETA1),
    kc(9): ("c_beta1 w_beta2", C_BETA1 @ W_BETA2),
    kc(10): ("c_delta", C_DELTA),
    kc("op"): ("c_beta1 c_beta2", C_BETA1 @ C_BETA2),
}


def representative(label: OrbitLabel) -> np.ndarray:
    """Table element g with K_C g B and G_R g B the dual pair named by label."""
    return TABLE[OrbitLabel("KC", label.index)][1]


@dataclass(frozen=True, eq=False)
class StandardElements:
    """Named matrices of the Sp(2,C) laboratory."""

    j: np.ndarray = field(default_factory=lambda: J)
    c_beta1: np.ndarray = field(default_factory=lambda: C_BETA1)
    c_beta2: np.ndarray = field(default_factory=lambda: C_BETA2)
    w_beta1: np.ndarray = field(default_factory=lambda: W_BETA1)
    w_beta2: np.ndarray = field(default_factory=lambda: W_BETA2)
    c_delta: np.ndarray = field(default_factory=lambda: C_DELTA)
    representatives: dict[OrbitLabel, np.ndarray] = field(
        default_factory=lambda: {label: g for label, (_, g) in TABLE.items()}
    )

    t1 = staticmethod(t1)
    t2 = staticmethod(t2)

    def named(self) -> dict[str, np.ndarray]:
        return {
            "J": self.j,
            "c_beta1": self.c_beta1,
            "c_beta2": self.c_beta2,
            "w_beta1": self.w_beta1,
            "w_beta2": self.w_beta2,
            "c_delta": self.c_delta,
        }


def standard_elements() -> StandardElements:
    elements = StandardElements()
    for g in [*elements.named().values(), *elements.representatives.values()]:
        check_symplectic(g, 1e-12)
    return elements


# Random group elements. Every sampler takes a numpy Generator.

def random_complex(rng: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_symmetric(rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    a = random_complex(rng, (2, 2)) * scale
    return (a + a.T) / 2


def random_kc(rng: np.random.Generator) -> np.ndarray:
    return k_hat(expm(random_complex(rng, (2, 2))))


def random_borel(rng: np.random.Generator) -> np.ndarray:
    """k_hat(upper triangular) [[I, S], [0, I]]: the stabilizer of (C e1, U_+)."""
    k = np.triu(random_complex(rng, (2, 2)))
    k[0, 0] = np.exp(random_complex(rng, ()))
    k[1, 1] = np.exp(random_complex(rng, ()))
    return k_hat(k) @ siegel_unipotent(random_symmetric(rng))


def random_siegel_parabolic(rng: np.random.Generator) -> np.ndarray:
    """Q = K_C exp(n): the stabilizer of U_+."""
    return random_kc(rng) @ siegel_unipotent(random_symmetric(rng))


def _sl2_on_e2_e4(m: np.ndarray) -> np.ndarray:
    g = np.eye(4, dtype=complex)
    idx = [1, 3]
    g[np.ix_(idx, idx)] = m
    return g


def random_p2(rng: np.random.Generator) -> np.ndarray:
    """Minimal parabolic of the long simple root: B L(m) B with m in SL(2,C) on (e2, e4)."""
    m = expm(random_complex(rng, (2, 2)))
    m = m / np.sqrt(np.linalg.det(m))
    return random_borel(rng) @ _sl2_on_e2_e4(m) @ random_borel(rng)


def random_parabolic(rng: np.random.Generator, index: int) -> np.ndarray:
    if index == 1:
        return random_siegel_parabolic(rng)
    if index == 2:
        return random_p2(rng)
    raise ValidationError(f"Parabolic index must be 1 or 2, got {index}")


def random_sp4_lie(rng: np.random.Generator) -> np.ndarray:
    """J S for complex symmetric S spans sp(4,C)."""
    a = random_complex(rng, (4, 4))
    return J @ ((a + a.T) / 2)


def random_gr(rng: np.random.Generator, scale: float = 0.5) -> np.ndarray:
    """exp of a random element of sp(2,R)."""
    y = random_sp4_lie(rng) * scale
    return expm((y + bar_lie(y)) / 2)
