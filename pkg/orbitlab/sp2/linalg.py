"""
Tolerance-aware numerical decisions: rank, zero tests and Hermitian signatures.

Every decision either lands clearly on one side of its threshold or raises
DegenerateError carrying the quantities that fell inside the ambiguity band.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from orbitlab.core.config import get_settings
from orbitlab.core.exceptions import DegenerateError


@dataclass(frozen=True)
class GramSignature:
    """Positive, negative and zero eigenvalue counts of a Hermitian Gram matrix."""

    p: int
    q: int
    z: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.z)

    def __str__(self) -> str:
        return f"({self.p},{self.q},{self.z})"


def numerical_rank(
    matrix: np.ndarray,
    cutoff: float | None = None,
    gap: float | None = None,
    what: str = "matrix",
) -> int:
    """
    Rank with singular values below cutoff * sigma_max counted as zero.

    Raises:
        DegenerateError: If the smallest retained and largest discarded
            singular values are closer than the factor gap
    """
    settings = get_settings()
    cutoff = cutoff if cutoff is not None else settings.rank_cutoff
    gap = gap if gap is not None else settings.rank_gap

    sigma = np.linalg.svd(np.atleast_2d(matrix), compute_uv=False)
    if sigma.size == 0 or sigma[0] == 0:
        return 0
    retained = sigma[sigma > cutoff * sigma[0]]
    discarded = sigma[sigma <= cutoff * sigma[0]]
    if discarded.size and discarded.max() > 0 and retained.min() < gap * discarded.max():
        raise DegenerateError(
            f"Unstable numerical rank of {what}",
            {"smallest_retained": float(retained.min()), "largest_discarded": float(discarded.max())},
        )
    return int(retained.size)


def is_zero(value: float, tol: float | None = None, gap: float | None = None, what: str = "scalar") -> bool:
    """
    Zero if |value| <= tol, nonzero if |value| >= gap * tol.

    Raises:
        DegenerateError: If |value| lies strictly between the two thresholds
    """
    settings = get_settings()
    tol = tol if tol is not None else settings.scalar_tol
    gap = gap if gap is not None else settings.rank_gap
    magnitude = abs(value)
    if magnitude <= tol:
        return True
    if magnitude >= gap * tol:
        return False
    raise DegenerateError(f"Ambiguous {what}", {what: float(magnitude), "tol": tol})


def sign_of(value: float, tol: float | None = None, what: str = "scalar") -> int:
    if is_zero(value, tol, what=what):
        return 0
    return 1 if value > 0 else -1


def orthonormal_basis(vectors: np.ndarray) -> np.ndarray:
    """Orthonormal basis (columns) of the column span."""
    return scipy.linalg.orth(np.asarray(vectors, dtype=complex).reshape(4, -1))


def intersection_dimension(a: np.ndarray, b: np.ndarray, what: str = "intersection") -> int:
    """dim(span a meet span b) = rank a + rank b - rank [a b]."""
    a = np.asarray(a, dtype=complex).reshape(4, -1)
    b = np.asarray(b, dtype=complex).reshape(4, -1)
    return (
        numerical_rank(a, what=what)
        + numerical_rank(b, what=what)
        - numerical_rank(np.hstack([a, b]), what=what)
    )


def gram_matrix(basis: np.ndarray, form: np.ndarray) -> np.ndarray:
    g = basis.conj().T @ form @ basis
    return (g + g.conj().T) / 2


def gram_signature(vectors: np.ndarray, form: np.ndarray, tol: float | None = None) -> GramSignature:
    """
    Signature of the Hermitian form restricted to the span of the columns.

    The span is orthonormalized first so eigenvalues are on the scale of the form.
    """
    basis = orthonormal_basis(vectors)
    eigenvalues = np.linalg.eigvalsh(gram_matrix(basis, form))
    signs = [sign_of(float(e), tol, what="gram_eigenvalue") for e in eigenvalues]
    return GramSignature(p=signs.count(1), q=signs.count(-1), z=signs.count(0))
