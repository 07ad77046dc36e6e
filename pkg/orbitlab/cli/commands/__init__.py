"""
Command modules, one per verb.
"""

from orbitlab.cli.commands import descriptor, roots, sp2, weyl

__all__ = ["descriptor", "roots", "sp2", "weyl"]
