"""
Numerical witnesses for non-empty intersections x S meet S'.

Points of x S (S a K_C-orbit with table representative g) are the flags of
x k_hat(k) g, k = exp(M) in GL(2,C). A witness is a k whose flag satisfies the
equations of the target G_R-orbit (or of its closure) up to a small
violation, while the open conditions of the target hold with a margin.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.linalg import expm
from scipy.optimize import minimize

from orbitlab.core.config import get_settings
from orbitlab.core.exceptions import DegenerateError, ValidationError, WitnessNotFoundError
from orbitlab.core.logging import get_logger
from orbitlab.sp2.flags import Flag4, classify_gr
from orbitlab.sp2.labels import OrbitLabel, gr, kc
from orbitlab.sp2.linalg import gram_matrix, orthonormal_basis
from orbitlab.sp2.matrices import H, J, k_hat, representative
from orbitlab.sp2.strata import boundary_point

logger = get_logger("sp2.search")

PARAMETER_COUNT = 8


@dataclass(frozen=True)
class Target:
    """A G_R-orbit, or its closure when closure=True."""

    label: OrbitLabel
    closure: bool = False

    def __str__(self) -> str:
        return f"({self.label})^cl" if self.closure else str(self.label)


@dataclass(frozen=True)
class Claim:
    name: str
    source: OrbitLabel
    target: Target
    mirror: bool = False
    alias_of: str | None = None

    def __str__(self) -> str:
        side = "x-bar" if self.mirror else "x"
        return f"{side} {self.source} meets {self.target}"


_BASE_CLAIMS = (
    Claim("3.1", kc(1), Target(gr(8))),
    Claim("3.2", kc(3), Target(gr(9))),
    Claim("3.3", kc(5), Target(gr("op"))),
    Claim("3.4", kc(3), Target(gr(7), closure=True)),
    Claim("3.5", kc(5), Target(gr(10), closure=True)),
    Claim("r3.1a", kc(2), Target(gr(9)), mirror=True),
    Claim("r3.1b", kc(6), Target(gr("op")), mirror=True),
    Claim("r3.1c", kc(6), Target(gr(10), closure=True), mirror=True),
    Claim("r3.1d", kc(4), Target(gr(8)), mirror=True),
    Claim("r3.1e", kc(4), Target(gr(7), closure=True), mirror=True),
)

_ALIASES = {"p3.2a": "3.4", "p3.2b": "3.5"}


def _build_registry() -> dict[str, Claim]:
    registry = {c.name: c for c in _BASE_CLAIMS}
    for alias, original in _ALIASES.items():
        base = registry[original]
        registry[alias] = Claim(alias, base.source, base.target, base.mirror, alias_of=original)
    return registry


CLAIMS: dict[str, Claim] = _build_registry()


def get_claim(name: str) -> Claim:
    if name not in CLAIMS:
        raise ValidationError(f"Unknown claim {name!r}; expected one of {sorted(CLAIMS)}")
    return CLAIMS[name]


# Residuals on a normalized line v and an orthonormal basis q of V2

def null_residual(v: np.ndarray, q: np.ndarray) -> float:
    return float(np.real(v.conj() @ H @ v)) ** 2


def s_type_residual(v: np.ndarray, q: np.ndarray) -> float:
    a = v @ J
    b = v.conj() @ H
    a = a / np.linalg.norm(a)
    b = b / np.linalg.norm(b)
    return max(0.0, float(1.0 - abs(a @ b.conj()) ** 2))


def plane_null_residual(v: np.ndarray, q: np.ndarray) -> float:
    return float(np.linalg.norm(gram_matrix(q, H)) ** 2)


def positive_margin(q: np.ndarray) -> float:
    return float(np.linalg.eigvalsh(gram_matrix(q, H)).max())


def negative_margin(q: np.ndarray) -> float:
    return float(-np.linalg.eigvalsh(gram_matrix(q, H)).min())


Residual = Callable[[np.ndarray, np.ndarray], float]


@dataclass(frozen=True)
class TargetEquations:
    residuals: tuple[Residual, ...]
    margins: dict[str, Callable[[np.ndarray], float]] = field(default_factory=dict)


def target_equations(target: Target) -> TargetEquations:
    """
    Raises:
        ValidationError: For targets without a search definition
    """
    key = (target.label.index, target.closure)
    if key == ("8", False):
        return TargetEquations((null_residual, s_type_residual), {"V2 meets C+": positive_margin})
    if key == ("9", False):
        return TargetEquations((null_residual, s_type_residual), {"V2 meets C-": negative_margin})
    if key == ("op", False):
        return TargetEquations((null_residual, s_type_residual, plane_null_residual))
    if key == ("7", True):
        return TargetEquations((null_residual,))
    if key == ("10", True):
        return TargetEquations((plane_null_residual,))
    raise ValidationError(f"No search equations for target {target}")


def k_from_params(params: np.ndarray) -> np.ndarray:
    m = (params[:4] + 1j * params[4:]).reshape(2, 2)
    return expm(m)


def point_flag(x: np.ndarray, g_source: np.ndarray, params: np.ndarray) -> Flag4:
    g = x @ k_hat(k_from_params(params)) @ g_source
    return Flag4(v1=g[:, 0], v2=g[:, :2])


def _normalized(f: Flag4) -> tuple[np.ndarray, np.ndarray]:
    return f.v1 / np.linalg.norm(f.v1), orthonormal_basis(f.v2)


def violation(f: Flag4, equations: TargetEquations) -> float:
    v, q = _normalized(f)
    return max(0.0, float(sum(r(v, q) for r in equations.residuals)))


def margins(f: Flag4, equations: TargetEquations) -> dict[str, float]:
    _, q = _normalized(f)
    return {name: fn(q) for name, fn in equations.margins.items()}


@dataclass(frozen=True, eq=False)
class Witness:
    claim: str | None
    source: OrbitLabel
    target: Target
    x: np.ndarray
    k: np.ndarray
    violation: float
    margins: dict[str, float]
    start: int
    evaluations: int
    success: bool
    label: OrbitLabel | None = None


@dataclass(frozen=True)
class _StartResult:
    index: int
    params: np.ndarray = field(compare=False)
    violation: float
    margins: dict[str, float] = field(compare=False)
    evaluations: int
    success: bool


def _run_start(
    index: int,
    start: np.ndarray,
    objective: Callable[[np.ndarray], float],
    finish: Callable[[np.ndarray], tuple[float, dict[str, float], bool]],
    budget: int,
) -> _StartResult:
    result = minimize(
        objective,
        start,
        method="Nelder-Mead",
        options={"maxfev": budget, "xatol": 1e-12, "fatol": 1e-18, "adaptive": True},
    )
    value, found_margins, success = finish(result.x)
    logger.debug(f"start {index}: violation {value:.3e} after {result.nfev} evaluations")
    return _StartResult(index, result.x, value, found_margins, int(result.nfev), success)


def _witness_label(f: Flag4, value: float) -> OrbitLabel | None:
    settings = get_settings()
    tol = max(settings.scalar_tol, 10.0 * float(np.sqrt(max(value, 0.0))))
    try:
        return classify_gr(f, tol)
    except DegenerateError:
        return None


def intersection_search(
    x: np.ndarray,
    source: OrbitLabel,
    target: Target,
    budget: int | None = None,
    starts: int | None = None,
    seed: int | None = None,
    tol: float | None = None,
    margin: float | None = None,
    workers: int | None = None,
    claim: str | None = None,
) -> Witness:
    """
    Multi-start Nelder-Mead search for k with x k_hat(k) g_source in the target.

    All starting points are drawn up front from the seed. Starts are run in
    rounds of settings.search_chunk_size; the search stops after the first
    round containing a success, and the reported witness is the best one by
    (success, violation, start index), so the result does not depend on the
    number of workers.

    Raises:
        ValidationError: If source is not a K_C-orbit or the target has no equations
        WitnessNotFoundError: If no start reaches the violation and margin thresholds
    """
    settings = get_settings()
    budget = budget if budget is not None else settings.search_budget
    starts = starts if starts is not None else settings.search_starts
    seed = seed if seed is not None else settings.default_seed
    tol = tol if tol is not None else settings.search_violation_tol
    margin = margin if margin is not None else settings.search_margin
    workers = workers if workers is not None else settings.search_workers

    if source.side != "KC":
        raise ValidationError(f"Search sources are K_C-orbits, got {source}")
    equations = target_equations(target)
    g_source = representative(source)
    rng = np.random.default_rng(seed)
    initial = rng.standard_normal((starts, PARAMETER_COUNT))

    def objective(params: np.ndarray) -> float:
        return violation(point_flag(x, g_source, params), equations)

    def finish(params: np.ndarray) -> tuple[float, dict[str, float], bool]:
        f = point_flag(x, g_source, params)
        value = violation(f, equations)
        found = margins(f, equations)
        return value, found, value < tol and all(m > margin for m in found.values())

    results: list[_StartResult] = []
    chunk = max(1, settings.search_chunk_size)
    for offset in range(0, starts, chunk):
        indices = range(offset, min(offset + chunk, starts))
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results.extend(pool.map(lambda i: _run_start(i, initial[i], objective, finish, budget), indices))
        else:
            results.extend(_run_start(i, initial[i], objective, finish, budget) for i in indices)
        if any(r.success for r in results):
            break

    best = min(results, key=lambda r: (not r.success, r.violation, r.index))
    if not best.success:
        logger.warning(f"No witness for {source} meets {target}: best violation {best.violation:.3e}")
        raise WitnessNotFoundError(claim or f"{source} meets {target}", best.violation)

    f = point_flag(x, g_source, best.params)
    witness = Witness(
        claim=claim,
        source=source,
        target=target,
        x=x,
        k=k_from_params(best.params),
        violation=best.violation,
        margins=best.margins,
        start=best.index,
        evaluations=sum(r.evaluations for r in results),
        success=True,
        label=_witness_label(f, best.violation),
    )
    logger.info(f"Witness for {source} meets {target} from start {best.index}: violation {best.violation:.3e}")
    return witness


def search_claim(name: str, s2: float = 0.0, **kwargs) -> Witness:
    """Run intersection_search for a named claim at the boundary point with parameter s2."""
    claim = get_claim(name)
    x = boundary_point(s2, mirror=claim.mirror)
    return intersection_search(x, claim.source, claim.target, claim=claim.name, **kwargs)
