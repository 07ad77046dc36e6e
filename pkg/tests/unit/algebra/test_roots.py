"""
Unit tests for root systems in exact arithmetic.
"""

import itertools
from fractions import Fraction

import pytest

from orbitlab.algebra.roots import (
    Root,
    build_root_system,
    check_z_defines_theta,
    compact_roots,
    delta_theta,
    format_rational,
    format_vector,
    in_span,
    is_strongly_orthogonal,
    noncompact_positive_roots,
    parse_vector,
    root_inner_product,
    simple_roots_of_positive_system,
    sorted_roots,
    z_for_theta,
)
from orbitlab.algebra.weyl import act_on_positive_system, reflection
from orbitlab.core.exceptions import InvalidPositiveSystemError, NotARootError, ValidationError


def strings(roots) -> list[str]:
    return [str(r) for r in sorted_roots(roots)]


class TestVectorText:
    """Tests for parsing and formatting root strings."""

    @pytest.mark.parametrize("text, coords", [
        ("2e1", (2, 0)),
        ("e1-e2", (1, -1)),
        ("-2e2", (0, -2)),
        ("-e1+e2", (-1, 1)),
        ("1/2e1", (Fraction(1, 2), 0)),
        (" e1 + e2 ", (1, 1)),
    ])
    def test_parse(self, text, coords):
        """Test parse_vector reads signed linear combinations."""
        assert parse_vector(text, 2) == tuple(Fraction(c) for c in coords)

    @pytest.mark.parametrize("text", ["", "e3", "x", "2e", "e1-", "e1*e2"])
    def test_parse_rejects_malformed(self, text):
        """Test malformed strings raise ValidationError."""
        with pytest.raises(ValidationError):
            parse_vector(text, 2)

    def test_format(self):
        """Test format_vector writes the canonical form."""
        assert format_vector((Fraction(2), Fraction(0))) == "2e1"
        assert format_vector((Fraction(1), Fraction(-1))) == "e1-e2"
        assert format_vector((Fraction(0), Fraction(-2))) == "-2e2"
        assert format_vector((Fraction(1, 2), Fraction(0))) == "1/2e1"
        assert format_vector((Fraction(0), Fraction(0))) == "0"

    def test_format_rational(self):
        """Test integral rationals drop the denominator."""
        assert format_rational(Fraction(4, 2)) == "2"
        assert format_rational(Fraction(-3, 2)) == "-3/2"

    def test_inner_product(self):
        """Test the exact dot product of roots and vectors."""
        assert root_inner_product(Root.parse("2e1", 2), Root.parse("e1+e2", 2)) == 2
        assert root_inner_product((Fraction(3, 2), Fraction(1, 2)), (1, -1)) == 1

    def test_inner_product_dimension_mismatch(self):
        """Test vectors of different lengths are rejected."""
        with pytest.raises(ValidationError, match="Dimension mismatch"):
            root_inner_product((1, 0), (1, 0, 0))

    def test_zero_root_rejected(self):
        """Test a root must be nonzero."""
        with pytest.raises(ValidationError, match="nonzero"):
            Root((0, 0))


class TestBuildRootSystem:
    """Tests for build_root_system."""

    def test_c2_roots(self, c2):
        """Test C2 has the eight roots +-2e_i, +-e1+-e2."""
        assert len(c2.roots) == 8
        assert strings(c2.roots) == ["2e1", "e1+e2", "e1-e2", "2e2", "-2e2", "-e1+e2", "-e1-e2", "-2e1"]
        assert [str(a) for a in c2.simple_roots] == ["e1-e2", "2e2"]

    def test_c1_roots(self):
        """Test the rank-one case."""
        rs = build_root_system("C", 1)
        assert strings(rs.roots) == ["2e1", "-2e1"]
        assert rs.central_element == (Fraction(1),)

    @pytest.mark.parametrize("family, rank", [("C", 3), ("B", 3), ("C", 4), ("B", 2)])
    def test_root_count(self, family, rank):
        """Test |Delta| = 2 rank^2 for types B and C."""
        assert len(build_root_system(family, rank).roots) == 2 * rank ** 2

    def test_positive_half(self, c3):
        """Test Delta is the disjoint union of Delta^+ and -Delta^+."""
        negatives = {-r for r in c3.positive_roots}
        assert c3.positive_roots.isdisjoint(negatives)
        assert c3.positive_roots | negatives == c3.roots

    def test_family_is_case_insensitive(self):
        """Test lowercase family names are accepted."""
        assert build_root_system("c", 2).family == "C"

    @pytest.mark.parametrize("family, rank", [("A", 2), ("D", 3), ("C", 0)])
    def test_invalid_family_or_rank(self, family, rank):
        """Test unsupported families and ranks raise ValidationError."""
        with pytest.raises(ValidationError):
            build_root_system(family, rank)

    def test_non_dominant_z(self):
        """Test a Z negative on a simple root is rejected."""
        with pytest.raises(ValidationError, match="not dominant"):
            build_root_system("C", 2, (0, 1))

    def test_z_dimension(self):
        """Test Z must have one coordinate per rank."""
        with pytest.raises(ValidationError, match="dimension"):
            build_root_system("C", 2, (1, 1, 1))

    def test_require_root(self, c2):
        """Test require_root rejects non-roots."""
        assert str(c2.require_root((2, 0))) == "2e1"
        with pytest.raises(NotARootError, match="3e1"):
            c2.require_root((3, 0))

    def test_is_long(self, c2, b2):
        """Test long roots are those of maximal norm."""
        assert c2.is_long(Root.parse("2e1", 2))
        assert not c2.is_long(Root.parse("e1+e2", 2))
        assert b2.is_long(Root.parse("e1+e2", 2))
        assert not b2.is_long(Root.parse("e1", 2))

    def test_simple_coefficients(self, c2):
        """Test coordinates in the basis of simple roots."""
        assert c2.simple_coefficients(Root.parse("2e1", 2)) == (2, 1)
        assert c2.simple_coefficients(Root.parse("e1+e2", 2)) == (1, 1)
        assert c2.simple_coefficients(Root.parse("-2e2", 2)) == (0, -1)


class TestHermitianData:
    """Tests for the splitting of Delta by Z."""

    def test_c2_noncompact_positive(self, c2):
        """Test Delta_n^+ of sp(2, R)."""
        assert strings(noncompact_positive_roots(c2).members) == ["2e1", "e1+e2", "2e2"]

    def test_c2_compact(self, c2):
        """Test the compact roots of sp(2, R)."""
        assert strings(compact_roots(c2).members) == ["e1-e2", "-e1+e2"]

    def test_b_noncompact_positive(self, b3):
        """Test Delta_n^+ of so(2, 5) is {e1 +- e_s} and e1."""
        assert strings(noncompact_positive_roots(b3).members) == ["e1+e2", "e1+e3", "e1", "e1-e3", "e1-e2"]

    @pytest.mark.parametrize("family, rank", [("C", 2), ("C", 3), ("C", 4), ("B", 3)])
    def test_noncompact_sums_are_not_roots(self, family, rank):
        """Test alpha + beta is never a root for alpha, beta in Delta_n^+."""
        rs = build_root_system(family, rank)
        noncompact = noncompact_positive_roots(rs).members
        for a, b in itertools.product(noncompact, repeat=2):
            assert not rs.is_root(tuple(x + y for x, y in zip(a.coords, b.coords)))


class TestStrongOrthogonality:
    """Tests for is_strongly_orthogonal."""

    @pytest.mark.parametrize("a, b, expected", [
        ("2e1", "2e2", True),
        ("2e1", "e1+e2", False),
        ("e1+e2", "e1-e2", False),
        ("2e1", "2e1", False),
        ("2e1", "-2e1", False),
    ])
    def test_c2(self, c2, a, b, expected):
        """Test strong orthogonality in C2."""
        assert is_strongly_orthogonal(c2, Root.parse(a, 2), Root.parse(b, 2)) is expected

    def test_b2_long_pair(self, b2):
        """Test e1+e2 and e1-e2 are strongly orthogonal in B2 (2e1 is not a root)."""
        assert is_strongly_orthogonal(b2, Root.parse("e1+e2", 2), Root.parse("e1-e2", 2))

    def test_non_root_rejected(self, c2):
        """Test non-roots raise NotARootError."""
        with pytest.raises(NotARootError):
            is_strongly_orthogonal(c2, Root.parse("e1", 2), Root.parse("2e2", 2))


class TestParabolicData:
    """Tests for Delta_Theta and the central element of a parabolic."""

    def test_delta_theta(self, c2):
        """Test Delta_Theta for Theta = {e1-e2}."""
        assert strings(delta_theta(c2, [Root.parse("e1-e2", 2)]).members) == ["e1-e2", "-e1+e2"]
        assert delta_theta(c2, []).members == frozenset()

    def test_theta_must_be_simple(self, c2):
        """Test a non-simple Theta raises ValidationError."""
        with pytest.raises(ValidationError, match="simple roots"):
            delta_theta(c2, [Root.parse("2e1", 2)])

    @pytest.mark.parametrize("theta, z", [
        ((), (Fraction(3, 2), Fraction(1, 2))),
        (("e1-e2",), (Fraction(1, 2), Fraction(1, 2))),
        (("2e2",), (Fraction(1), Fraction(0))),
    ])
    def test_z_for_theta(self, c2, theta, z):
        """Test Z is the sum of fundamental coweights outside Theta."""
        roots = [Root.parse(a, 2) for a in theta]
        assert z_for_theta(c2, roots) == z
        check_z_defines_theta(c2, z, roots)

    def test_z_theta_mismatch(self, c2):
        """Test Z = (1, 1) defines Theta = {e1-e2}, not the empty set."""
        check_z_defines_theta(c2, (1, 1), [Root.parse("e1-e2", 2)])
        with pytest.raises(ValidationError, match="vanishes on"):
            check_z_defines_theta(c2, (1, 1), [])

    def test_in_span(self):
        """Test exact span membership."""
        basis = [(Fraction(1), Fraction(1))]
        assert in_span((Fraction(2), Fraction(2)), basis)
        assert not in_span((Fraction(1), Fraction(0)), basis)
        assert in_span((Fraction(0), Fraction(0)), [])


class TestPositiveSystems:
    """Tests for simple_roots_of_positive_system."""

    def test_standard(self, c2):
        """Test the simple roots of Delta^+ are Psi."""
        assert simple_roots_of_positive_system(c2, c2.positive_roots) == frozenset(c2.simple_roots)

    def test_reflected(self, c2):
        """Test w_{2e2} Delta^+ = {2e1, e1+e2, e1-e2, -2e2} has simple roots e1+e2 and -2e2."""
        positive = act_on_positive_system(reflection(c2, Root.parse("2e2", 2)), c2)
        assert strings(positive) == ["2e1", "e1+e2", "e1-e2", "-2e2"]
        assert strings(simple_roots_of_positive_system(c2, positive)) == ["e1+e2", "-2e2"]

    def test_long_subsystem(self, c2):
        """Test {2e1} is a positive system of the A1 it spans."""
        assert strings(simple_roots_of_positive_system(c2, [Root.parse("2e1", 2)])) == ["2e1"]

    @pytest.mark.parametrize("members", [
        [],
        ["2e1", "-2e1"],
        ["e1-e2", "2e2"],
    ])
    def test_invalid(self, c2, members):
        """Test sets that are not positive systems are rejected."""
        with pytest.raises(InvalidPositiveSystemError):
            simple_roots_of_positive_system(c2, [Root.parse(m, 2) for m in members])
