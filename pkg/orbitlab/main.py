"""
Command-line entry point for orbitlab.
"""

import sys

import click

from orbitlab.cli import cli
from orbitlab.cli.deps import EXIT_FAILURE, EXIT_OK, emit_error, exit_code_for
from orbitlab.core.config import get_settings
from orbitlab.core.exceptions import OrbitLabException
from orbitlab.core.logging import logger, setup_logging

settings = get_settings()

setup_logging(level=settings.log_level, format_type=settings.log_format)


def run(argv: list[str] | None = None) -> int:
    """
    Run one command and return its exit code.

    0 on success, 1 on a verification failure, 2 on a usage error.
    """
    try:
        result = cli.main(args=argv, prog_name="orbitlab", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        return EXIT_FAILURE
    except OrbitLabException as exc:
        emit_error(exc, "--json" in (argv or []))
        return exit_code_for(exc)
    except Exception as exc:
        logger.exception(f"Unhandled error: {exc}")
        click.echo(f"Internal error: {exc}", err=True)
        return EXIT_FAILURE
    return result if isinstance(result, int) else EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
