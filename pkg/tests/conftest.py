"""
Pytest configuration and fixtures for orbitlab tests.
"""

import os

import numpy as np
import pytest

# Set test environment before importing orbitlab
os.environ.setdefault("ENVIRONMENT", "test")
os.environ.setdefault("LOG_LEVEL", "WARNING")

from orbitlab.algebra.orbit_calculus import OrbitDescriptor, make_descriptor  # noqa: E402
from orbitlab.algebra.roots import Root, RootSystem, build_root_system  # noqa: E402
from orbitlab.algebra.weyl import WeylElement  # noqa: E402


@pytest.fixture
def c2() -> RootSystem:
    """C2 with Z = (1, 1), the complexified root system of sp(2, R)."""
    return build_root_system("C", 2)


@pytest.fixture
def c3() -> RootSystem:
    return build_root_system("C", 3)


@pytest.fixture
def b2() -> RootSystem:
    """B2 with Z = (1, 0), the root system of so(2, 3)."""
    return build_root_system("B", 2)


@pytest.fixture
def b3() -> RootSystem:
    return build_root_system("B", 3)


@pytest.fixture
def make():
    """Build a descriptor from root strings and a signed permutation."""
    def _make(rs: RootSystem, gammas=(), w: str = "e", theta=(), beta_prefix: str | None = None) -> OrbitDescriptor:
        return make_descriptor(
            rs,
            [Root.parse(g, rs.rank) for g in gammas],
            WeylElement.parse(w, rs.rank),
            [Root.parse(a, rs.rank) for a in theta],
            Root.parse(beta_prefix, rs.rank) if beta_prefix else None,
        )

    return _make


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(0)
