"""
weyl: parabolic subgroups W_Theta and single Weyl elements.
"""

import click

from orbitlab.cli.deps import EXIT_OK, emit, handle_errors, json_option, root_system_options, split_list
from orbitlab.schemas.roots import WeylResult
from orbitlab.services import RootSystemService

_service = RootSystemService()


def render(result: WeylResult) -> str:
    theta = ", ".join(result.theta) or "empty"
    lines = [f"{result.family}{result.rank}: |W_Theta| = {result.size} (Theta = {theta}); w0 = {result.longest.text}"]
    if result.element is not None:
        lines.append(
            f"  w = {result.element.text}: inverse {result.inverse.text}, length {result.length}, "
            f"simple roots -> {' '.join(result.image_of_simple_roots)}"
        )
    if result.elements is not None:
        lines.extend(f"  {x.text}" for x in result.elements)
    return "\n".join(lines)


@click.command("weyl")
@root_system_options
@click.option("--theta", default=None, help="Comma-separated simple roots; omitted means all, \"\" means none")
@click.option("--w", "w", default=None, help="Signed permutation, e.g. \"1,-2\"")
@click.option("--list", "list_elements", is_flag=True, help="List the elements of W_Theta")
@json_option
@handle_errors
def weyl(family: str, rank: int, theta: str | None, w: str | None, list_elements: bool, as_json: bool) -> int:
    """Enumerate W_Theta and describe a Weyl element."""
    result, _ = _service.weyl(family, rank, None if theta is None else split_list(theta), w, list_elements)
    emit(result, as_json, render)
    return EXIT_OK
