"""
sp2: the Sp(2,R) laboratory.
"""

from pathlib import Path

import click

from orbitlab.cli.deps import (
    EXIT_FAILURE,
    EXIT_OK,
    emit,
    handle_errors,
    json_option,
    load_flag,
    seed_option,
    tol_option,
)
from orbitlab.schemas.sp2 import (
    BoundaryLabelsResult,
    DiagramResult,
    DimensionsResult,
    DualityTableResult,
    StrataResult,
    WitnessModel,
)
from orbitlab.services import SearchService, Sp2Service
from orbitlab.sp2.labels import OrbitLabel
from orbitlab.sp2.search import CLAIMS

_service = Sp2Service()
_search = SearchService()


@click.group("sp2")
def sp2():
    """K_C- and G_R-orbits on Sp(2,C)/B."""


@sp2.command("classify")
@click.option("--flag", "flag_path", type=click.Path(exists=True, dir_okay=False, path_type=Path), required=True)
@tol_option
@json_option
@handle_errors
def classify(flag_path: Path, tol: float | None, as_json: bool) -> int:
    """Classify a flag read from a JSON file."""
    result, _ = _service.classify(load_flag(flag_path), tol)
    emit(result, as_json, lambda r: f"{r.kc} / {r.gr}")
    return EXIT_OK


def _render_table(r: DualityTableResult) -> str:
    lines = [f"{'j':>3}  {'g':<18} {'K_C':<5} {'G_R':<5}"]
    for row in r.rows:
        mark = "ok" if row.matched else f"MISMATCH {row.error or ''}".rstrip()
        lines.append(f"{row.index:>3}  {row.element:<18} {row.kc or '?':<5} {row.gr or '?':<5} {mark}")
    lines.append(r.summary)
    return "\n".join(lines)


@sp2.command("verify-table")
@tol_option
@json_option
@handle_errors
def verify_table(tol: float | None, as_json: bool) -> int:
    """Check that every table element realizes its dual pair (S_j, S'_j)."""
    result, _ = _service.verify_table(tol)
    emit(result, as_json, _render_table)
    return EXIT_OK if result.success else EXIT_FAILURE


def _render_dims(r: DimensionsResult) -> str:
    lines = [" ".join(f"{label}={d}" for label, d in r.dimensions.items())]
    lines.extend(
        f"  {s.source} -{s.parabolic}-> {s.target}: {s.source_dimension} -> {s.target_dimension}" for s in r.ladder
    )
    return "\n".join(lines)


@sp2.command("dims")
@json_option
@handle_errors
def dims(as_json: bool) -> int:
    """Orbit dimensions by tangent rank, and the ladder along the diagram edges."""
    result, _ = _service.dimensions()
    emit(result, as_json, _render_dims)
    return EXIT_OK


@sp2.command("diagram")
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Also write the DOT text to this file")
@click.option("--saturate", is_flag=True, help="Cross-check every edge by saturation sampling")
@click.option("--samples", type=click.IntRange(min=1), default=None, help="Samples per edge")
@seed_option
@json_option
@handle_errors
def diagram(dot_path: Path | None, saturate: bool, samples: int | None, seed: int | None, as_json: bool) -> int:
    """The closure diagram of K_C-orbits as DOT."""
    result, _ = _service.diagram(saturate, samples, seed)
    if dot_path is not None:
        dot_path.write_text(result.dot)
    emit(result, as_json, lambda r: r.dot.rstrip("\n"))
    consistent = all(s.consistent for s in result.saturation or [])
    closures = all(d.holds for d in result.degenerations)
    return EXIT_OK if consistent and closures else EXIT_FAILURE


def _render_boundary(r: BoundaryLabelsResult) -> str:
    lines = [f"  {row.source} -> S1~ = {row.s1}, S2~ = {row.s2}" for row in r.rows]
    lines.append("consistent" if r.consistent else "INCONSISTENT")
    return "\n".join(lines)


@sp2.command("boundary")
@json_option
@handle_errors
def boundary(as_json: bool) -> int:
    """Boundary orbits of the non-closed K_C-orbits, named by classification."""
    result, _ = _service.boundary_labels()
    emit(result, as_json, _render_boundary)
    return EXIT_OK if result.consistent else EXIT_FAILURE


def _render_strata(r: StrataResult) -> str:
    return f"s2={r.s2} mirror={r.mirror}: xU+ stratum {r.plus}, xU- stratum {r.minus}, in D: {r.in_domain}"


@sp2.command("strata")
@click.option("--s2", type=float, default=0.0, help="Parameter in (-pi/4, pi/4)")
@click.option("--mirror", is_flag=True, help="Use the conjugate boundary point")
@json_option
@handle_errors
def strata(s2: float, mirror: bool, as_json: bool) -> int:
    """Boundary point of the domain and its strata."""
    result, _ = _service.strata(s2, mirror)
    emit(result, as_json, _render_strata)
    return EXIT_OK


def _render_witness(r: WitnessModel) -> str:
    k = "; ".join(" ".join(f"{re:+.6f}{im:+.6f}i" for re, im in row) for row in r.k)
    margins = ", ".join(f"{name} {value:.3e}" for name, value in r.margins.items()) or "none"
    return "\n".join([
        f"claim {r.claim}: {'x-bar' if r.mirror else 'x'} {r.source} meets {r.target} (s2={r.s2})",
        f"  k = [{k}]",
        f"  violation {r.violation:.3e}, margins: {margins}, label {r.label or '?'}",
        f"  start {r.start}, {r.evaluations} evaluations",
    ])


@sp2.command("search")
@click.option("--claim", type=click.Choice(sorted(CLAIMS)), required=True)
@click.option("--s2", type=float, default=0.0, help="Boundary point parameter in (-pi/4, pi/4)")
@seed_option
@tol_option
@click.option("--budget", type=click.IntRange(min=1), default=None, help="Evaluations per start")
@click.option("--starts", type=click.IntRange(min=1), default=None, help="Number of starts")
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Threads evaluating starts")
@json_option
@handle_errors
def search(claim: str, s2: float, seed, tol, budget, starts, workers, as_json: bool) -> int:
    """Search for a witness of an intersection claim."""
    result, _ = _search.search(claim, s2, seed=seed, tol=tol, budget=budget, starts=starts, workers=workers)
    emit(result, as_json, _render_witness)
    return EXIT_OK


@sp2.command("lift")
@click.option("--source", required=True, help="K_C-orbit label, e.g. S1")
@json_option
@handle_errors
def lift(source: str, as_json: bool) -> int:
    """Parabolic labels along a diagram path from source to S_op."""
    result, _ = _service.lift(OrbitLabel.parse(source))
    emit(result, as_json, lambda r: f"{' -> '.join(r.path)}: {r.sequence}")
    return EXIT_OK
