"""
roots: list a root system with its Hermitian data.
"""

import click

from orbitlab.cli.deps import EXIT_OK, handle_errors, emit, json_option, root_system_options
from orbitlab.schemas.roots import RootSystemResult
from orbitlab.services import RootSystemService

_service = RootSystemService()


def render(result: RootSystemResult) -> str:
    lines = [
        f"{result.family}{result.rank}: {result.count} roots, Z = ({', '.join(result.central_element)})",
        f"  roots:        {' '.join(result.roots)}",
        f"  simple:       {' '.join(result.simple_roots)}",
        f"  noncompact+:  {' '.join(result.noncompact_positive)}",
        f"  compact:      {' '.join(result.compact) or '-'}",
    ]
    return "\n".join(lines)


@click.command("roots")
@root_system_options
@click.option("--z", default=None, help="Central element, e.g. \"e1+e2\"")
@json_option
@handle_errors
def roots(family: str, rank: int, z: str | None, as_json: bool) -> int:
    """List the roots of B_rank or C_rank."""
    result, _ = _service.describe(family, rank, z)
    emit(result, as_json, render)
    return EXIT_OK
