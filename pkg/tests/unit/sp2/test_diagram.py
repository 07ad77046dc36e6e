"""
Unit tests for the closure diagram.
"""

import pytest

from orbitlab.core.config import get_settings
from orbitlab.core.exceptions import ValidationError
from orbitlab.sp2.diagram import (
    CLOSURE_CHECKS,
    EDGES,
    DiagramEdge,
    SaturationResult,
    closure_diagram,
    degeneration_check,
    dimension_ladder,
    lift_path,
    lift_sequence,
    parse_dot,
    saturation_allowed,
    saturation_check,
    to_dot,
)
from orbitlab.sp2.dimensions import orbit_dimension
from orbitlab.sp2.labels import gr, kc


class TestDotFormat:
    """Tests for DOT output and parsing."""

    def test_round_trip(self):
        """Test parse_dot reads back the edges written by to_dot."""
        edges, dot = closure_diagram()
        assert len(edges) == 12
        assert dot.startswith("digraph orbits {")
        assert parse_dot(dot) == edges

    def test_edge_line(self):
        """Test the printed form of an edge."""
        assert 'S10 -> Sop [label="1"];' in to_dot(list(EDGES))
        assert str(DiagramEdge(kc(1), kc(5), 2)) == "S1 -2-> S5"

    def test_not_a_digraph(self):
        """Test non-DOT input is rejected."""
        with pytest.raises(ValidationError, match="Not a DOT digraph"):
            parse_dot("graph { S1 -- S5 }")

    def test_malformed_edge(self):
        """Test an edge line without a label is rejected."""
        with pytest.raises(ValidationError, match="Malformed DOT edge"):
            parse_dot("digraph orbits {\n    S1 -> S5;\n}\n")


class TestLiftSequences:
    """Tests for lift sequences toward the open orbit."""

    @pytest.mark.parametrize("index, expected", [
        (1, [2, 1, 2]),
        (2, [2, 1, 2]),
        (3, [2, 1, 2]),
        (4, [2, 1, 2]),
        (7, [2, 1]),
        (10, [1]),
    ])
    def test_sequence(self, index, expected):
        """Test the parabolic labels along the path upward."""
        assert lift_sequence(kc(index)) == expected

    @pytest.mark.parametrize("index", [1, 4, 5, 6, 8, 9])
    def test_length_is_codimension(self, index):
        """Test the path length equals 4 - dim."""
        assert len(lift_sequence(kc(index))) == 4 - orbit_dimension(kc(index))

    def test_path(self):
        """Test the orbits visited from S7."""
        assert lift_path(kc(7)) == [kc(7), kc(10), kc("op")]

    def test_branching_prefers_label_2(self, mocker):
        """Test S3 and S4 climb through S5 and S6 whatever the edge order."""
        mocker.patch("orbitlab.sp2.diagram.EDGES", tuple(reversed(EDGES)))
        assert lift_path(kc(3)) == [kc(3), kc(5), kc(8), kc("op")]
        assert lift_path(kc(4)) == [kc(4), kc(6), kc(9), kc("op")]

    def test_open_orbit(self):
        """Test the open orbit has no lift sequence."""
        with pytest.raises(ValidationError, match="open orbit"):
            lift_sequence(kc("op"))

    def test_gr_source(self):
        """Test G_R labels are rejected."""
        with pytest.raises(ValidationError):
            lift_sequence(gr(1))


class TestDiagramChecks:
    """Tests for the dimension, saturation and degeneration checks."""

    def test_dimension_ladder(self):
        """Test every edge raises the dimension by one."""
        ladder = dimension_ladder()
        assert len(ladder) == 12
        assert all(hi == lo + 1 for lo, hi in ladder.values())

    def test_saturation_allowed(self):
        """Test the orbits allowed in X P_k."""
        assert saturation_allowed(DiagramEdge(kc(5), kc(8), 1)) == {kc(5), kc(8)}
        assert saturation_allowed(DiagramEdge(kc(3), kc(5), 2)) == {kc(1), kc(3), kc(5)}

    @pytest.mark.slow
    @pytest.mark.parametrize("edge", EDGES, ids=str)
    def test_saturation_of_every_edge(self, edge):
        """Test every sample of representative(X) P_k lands in an allowed orbit and Y is reached."""
        result = saturation_check(edge, samples=get_settings().saturation_samples, seed=0)
        assert result.consistent
        assert result.counts.get(edge.target, 0) > 0

    def test_all_degenerate_is_not_consistent(self):
        """Test a saturation run without a classified sample is not consistent."""
        edge = DiagramEdge(kc(5), kc(8), 1)
        assert not SaturationResult(edge, samples=4, counts={}, degenerate=4).consistent
        assert SaturationResult(edge, samples=4, counts={kc(8): 3}, degenerate=1).consistent

    @pytest.mark.parametrize("source, target", CLOSURE_CHECKS, ids=str)
    def test_closure_inclusions(self, source, target):
        """Test S3 lies in the closure of S7 and S5 in the closure of S10."""
        assert degeneration_check(source, target)

    def test_degeneration_requires_source(self):
        """Test the check fails when the target is the source itself."""
        assert not degeneration_check(kc(3), kc(3))
