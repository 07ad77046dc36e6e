"""
Shared options, input parsing and output helpers for the command modules.
"""

import functools
import json
from pathlib import Path
from typing import Callable

import click
from pydantic import BaseModel
from pydantic import ValidationError as SchemaValidationError

from orbitlab.core.exceptions import OrbitLabException, ValidationError
from orbitlab.core.logging import get_logger
from orbitlab.schemas.sp2 import FlagModel
from orbitlab.sp2.flags import Flag4
from orbitlab.wrappers import unwrap_flag, wrap_error

logger = get_logger("cli")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# Error codes reported as usage errors; everything else is a failure
USAGE_CODES = {"VALIDATION_ERROR", "NOT_A_ROOT", "INVALID_POSITIVE_SYSTEM"}


def exit_code_for(exc: OrbitLabException) -> int:
    return EXIT_USAGE if exc.code in USAGE_CODES else EXIT_FAILURE


def split_list(value: str | None) -> list[str]:
    """Comma-separated items, e.g. "2e1,e1+e2"; empty or missing gives []."""
    if not value:
        return []
    return [part.strip() for part in value.split(",") if part.strip()]


def emit(model: BaseModel, as_json: bool, render: Callable[[BaseModel], str] | None = None) -> None:
    """Write a result to stdout as JSON or as human-readable text."""
    if as_json or render is None:
        click.echo(model.model_dump_json(by_alias=True, indent=2))
    else:
        click.echo(render(model))


def emit_error(exc: OrbitLabException, as_json: bool) -> None:
    if as_json:
        click.echo(wrap_error(exc).model_dump_json(indent=2))
    else:
        click.echo(f"Error [{exc.code}]: {exc.message}", err=True)


def handle_errors(func):
    """
    Turn library exceptions raised by a command into an error report and exit code.

    pydantic validation failures are reported as VALIDATION_ERROR.

    The wrapped command must accept an as_json keyword.
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (OrbitLabException, SchemaValidationError) as e:
            exc = e if isinstance(e, OrbitLabException) else ValidationError(f"Schema validation failed: {e}")
            logger.warning(f"{exc.code}: {exc.message}")
            emit_error(exc, kwargs.get("as_json", False))
            return exit_code_for(exc)

    return wrapper


json_option = click.option("--json", "as_json", is_flag=True, help="Machine-readable JSON output")
seed_option = click.option("--seed", type=click.IntRange(0, 2**64 - 1), default=None, help="Random seed (u64)")
tol_option = click.option("--tol", type=float, default=None, help="Numerical tolerance")


def root_system_options(func):
    func = click.option("--rank", type=click.IntRange(min=1), required=True, help="Rank")(func)
    func = click.option(
        "--family", type=click.Choice(["B", "C"], case_sensitive=False), required=True, help="Root system family"
    )(func)
    return func


def load_flag(path: Path) -> Flag4:
    """
    Read a flag JSON file {"v1": [[re, im] x 4], "V2": [[[re, im] x 4] x 2]}.

    Raises:
        ValidationError: If the file is not valid flag JSON
    """
    try:
        model = FlagModel.model_validate(json.loads(path.read_text()))
    except (json.JSONDecodeError, SchemaValidationError) as e:
        raise ValidationError(f"Invalid flag file {path}: {e}")
    return unwrap_flag(model)
