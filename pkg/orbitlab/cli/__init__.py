"""
Command-line interface for orbitlab.
"""

import click

from orbitlab.cli.commands import descriptor, roots, sp2, weyl
from orbitlab.core.config import get_settings


@click.group(name="orbitlab")
@click.version_option(version=get_settings().version, prog_name="orbitlab")
def cli():
    """Orbit calculus and the Sp(2,R) laboratory."""


cli.add_command(roots.roots)
cli.add_command(weyl.weyl)
cli.add_command(descriptor.descriptor)
cli.add_command(sp2.sp2)

__all__ = ["cli"]
