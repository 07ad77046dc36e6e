"""
Unit tests for boundary strata of the domain D.
"""

import numpy as np
import pytest

from orbitlab.core.exceptions import ValidationError
from orbitlab.sp2.matrices import U_MINUS, U_PLUS
from orbitlab.sp2.strata import Stratum, boundary_point, boundary_strata, in_domain, stratum_of_plane


class TestStratumOfPlane:
    """Tests for the signature rule on isotropic planes."""

    def test_interior(self):
        """Test U+ is interior."""
        assert stratum_of_plane(U_PLUS) == Stratum.INTERIOR

    def test_opposite_plane_is_outside(self):
        """Test U- under H is outside the closure."""
        assert stratum_of_plane(U_MINUS) == Stratum.OUTSIDE
        assert stratum_of_plane(U_MINUS, sign=-1) == Stratum.INTERIOR

    def test_deepest(self):
        """Test a totally H-null isotropic plane is in the deepest stratum."""
        plane = np.array([[1, 0], [0, 1], [1, 0], [0, 1]], dtype=complex)
        assert stratum_of_plane(plane) == Stratum.DEEPEST

    def test_rejects_non_isotropic(self):
        """Test span(e1, e3) is rejected."""
        plane = np.eye(4, dtype=complex)[:, [0, 2]]
        with pytest.raises(ValidationError, match="not isotropic"):
            stratum_of_plane(plane)

    def test_rejects_rank_one(self):
        """Test a rank-one 4x2 matrix is rejected."""
        plane = np.eye(4, dtype=complex)[:, [0, 0]]
        with pytest.raises(ValidationError, match="rank-2"):
            stratum_of_plane(plane)


class TestBoundaryPoint:
    """Tests for the boundary points used by the searches."""

    @pytest.mark.parametrize("s2", [0.0, 0.3, -0.5])
    def test_codimension_one(self, s2):
        """Test xU+ is in the codimension-one stratum and xU- is interior."""
        x = boundary_point(s2)
        assert boundary_strata(x) == (Stratum.CODIM_ONE, Stratum.INTERIOR)
        assert not in_domain(x)

    def test_mirror(self):
        """Test the conjugate point swaps the two sides."""
        assert boundary_strata(boundary_point(0.0, mirror=True)) == (Stratum.INTERIOR, Stratum.CODIM_ONE)

    @pytest.mark.parametrize("s2", [np.pi / 4, -1.0])
    def test_parameter_range(self, s2):
        """Test |s2| >= pi/4 is rejected."""
        with pytest.raises(ValidationError, match="s2 must lie in"):
            boundary_point(s2)

    def test_base_point_in_domain(self):
        """Test eK_C lies in D."""
        assert in_domain(np.eye(4, dtype=complex))
