"""
Unit tests for orbit descriptors, beta-systems and boundary orbits.
"""

import itertools
from fractions import Fraction

import pytest

from orbitlab.algebra.orbit_calculus import (
    GammaSystem,
    boundary_orbit_s1,
    boundary_orbit_s2,
    boundary_pair_report,
    certify_nonclosed,
    choose_beta_system,
    enumerate_gamma_systems,
    is_holomorphic_type,
    mirror_descriptor,
    normalize_descriptor,
    phi_image,
    split_delta12,
)
from orbitlab.algebra.roots import (
    Root,
    build_root_system,
    in_span,
    is_strongly_orthogonal,
    noncompact_positive_roots,
    root_inner_product,
    sorted_roots,
)
from orbitlab.core.exceptions import BetaSystemError, NotARootError, NotNonClosedError, ValidationError


def roots(rs, *texts) -> tuple[Root, ...]:
    return tuple(Root.parse(t, rs.rank) for t in texts)


def strings(members) -> list[str]:
    return [str(r) for r in sorted_roots(members)]


class TestDescriptorValidation:
    """Tests for OrbitDescriptor construction."""

    def test_valid(self, c2, make):
        """Test S_op = (2e1, 2e2; e) is a valid descriptor."""
        d = make(c2, ["2e1", "2e2"])
        assert [str(g) for g in d.gammas] == ["2e1", "2e2"]
        assert d.w.is_identity
        assert str(d) == "(2e1, 2e2; w=1,2; Theta={})"

    @pytest.mark.parametrize("gammas, match", [
        (["2e1", "e1+e2"], "strongly orthogonal"),
        (["e1-e2"], "noncompact positive"),
        (["-2e1"], "noncompact positive"),
    ])
    def test_invalid_gammas(self, c2, make, gammas, match):
        """Test gammas must be strongly orthogonal noncompact positive roots."""
        with pytest.raises(ValidationError, match=match):
            make(c2, gammas)

    def test_gamma_not_a_root(self, c2, make):
        """Test a non-root gamma raises NotARootError."""
        with pytest.raises(NotARootError):
            make(c2, ["e1"])

    def test_theta_must_be_simple(self, c2, make):
        """Test Theta outside Psi is rejected."""
        with pytest.raises(ValidationError, match="simple roots"):
            make(c2, ["2e1"], theta=["2e1"])

    def test_gamma_system_validate(self, c2):
        """Test GammaSystem.validate on its own."""
        GammaSystem(roots(c2, "2e1", "2e2")).validate(c2)
        with pytest.raises(ValidationError):
            GammaSystem(roots(c2, "e1+e2", "2e2")).validate(c2)


class TestCertifyAndNormalize:
    """Tests for certify_nonclosed and normalize_descriptor."""

    def test_first_gamma_outside(self, c2, make):
        """Test j = 1 when Theta is empty."""
        assert certify_nonclosed(make(c2, ["2e1"])) == 1

    def test_no_gammas_is_closed(self, c2, make):
        """Test a descriptor without gammas is closed."""
        assert certify_nonclosed(make(c2, [], "1,-2")) is None

    def test_gamma_inside_w_delta_theta(self, c2, make):
        """Test w(e1-e2) = e1+e2 puts gamma inside w Delta_Theta."""
        d = make(c2, ["e1+e2"], "1,-2", ["e1-e2"])
        assert certify_nonclosed(d) is None
        with pytest.raises(NotNonClosedError):
            normalize_descriptor(d)

    def test_second_gamma_moves_first(self, c2, make):
        """Test the first gamma outside w Delta_Theta is moved to the front."""
        d = make(c2, ["2e2", "2e1"], theta=["2e2"])
        assert certify_nonclosed(d) == 2
        n = normalize_descriptor(d)
        assert [str(g) for g in n.gammas] == ["2e1", "2e2"]
        assert n.w.is_identity

    def test_w_replaced_by_reflection(self, c2, make):
        """Test w becomes w_{gamma_1} w when gamma_1 is not in w Delta^+."""
        n = normalize_descriptor(make(c2, ["2e1"], "-1,2"))
        assert str(n.w) == "1,2"

    def test_idempotent(self, c2, make):
        """Test normalizing twice changes nothing."""
        for w in ["1,2", "-1,2", "2,-1", "-2,-1"]:
            n = normalize_descriptor(make(c2, ["e1+e2"], w))
            assert normalize_descriptor(n) == n

    def test_prefix_folded(self, c2, make):
        """Test a beta prefix becomes the first gamma."""
        d = make(c2, [], beta_prefix="2e2")
        assert [str(g) for g in d.effective_gammas] == ["2e2"]
        n = normalize_descriptor(d)
        assert n.beta_prefix is None
        assert [str(g) for g in n.gammas] == ["2e2"]


class TestBetaSystems:
    """Tests for choose_beta_system and split_delta12."""

    def test_long_gamma(self, c2):
        """Test a long gamma_1 leads the beta-system."""
        b = choose_beta_system(c2, GammaSystem(roots(c2, "2e2")))
        assert [str(x) for x in b.betas] == ["2e2", "2e1"]
        assert b.gamma1_is_long

    def test_short_gamma(self, c2):
        """Test a short gamma_1 lies in the span of beta_1, beta_2."""
        b = choose_beta_system(c2, GammaSystem(roots(c2, "e1+e2")))
        assert [str(x) for x in b.betas] == ["2e1", "2e2"]
        assert not b.gamma1_is_long

    def test_empty_gamma_system(self, c3):
        """Test the standard beta-system of sp(3, R)."""
        b = choose_beta_system(c3, GammaSystem())
        assert [str(x) for x in b.betas] == ["2e1", "2e2", "2e3"]

    def test_so2odd(self, b3):
        """Test beta-systems of so(2, 5) have two elements."""
        assert [str(x) for x in choose_beta_system(b3, GammaSystem()).betas] == ["e1+e2", "e1-e2"]
        short = choose_beta_system(b3, GammaSystem(roots(b3, "e1")))
        assert [str(x) for x in short.betas] == ["e1+e2", "e1-e2"]
        assert not short.gamma1_is_long
        long = choose_beta_system(b3, GammaSystem(roots(b3, "e1+e3")))
        assert [str(x) for x in long.betas] == ["e1+e3", "e1-e3"]

    def test_equal_length(self, c2):
        """Test the equal-length construction extends the gammas greedily."""
        b = choose_beta_system(c2, GammaSystem(roots(c2, "2e1")), "equalLength")
        assert [str(x) for x in b.betas] == ["2e1", "2e2"]

    def test_equal_length_rejects_short(self, c2):
        """Test a short gamma in an equal-length real form."""
        with pytest.raises(BetaSystemError, match="Short roots"):
            choose_beta_system(c2, GammaSystem(roots(c2, "e1+e2")), "equalLength")

    @pytest.mark.parametrize("real_form", ["so2odd", "su"])
    def test_real_form_mismatch(self, c2, real_form):
        """Test real forms that do not fit the root system."""
        with pytest.raises(ValidationError):
            choose_beta_system(c2, GammaSystem(), real_form)

    def test_split_long(self, c2):
        """Test Delta_1 = {+-gamma_1} and Delta_2 its orthogonal complement."""
        g = GammaSystem(roots(c2, "2e1"))
        split = split_delta12(c2, choose_beta_system(c2, g), g)
        assert strings(split.delta1.members) == ["2e1", "-2e1"]
        assert strings(split.delta2.members) == ["2e2", "-2e2"]

    def test_split_short(self, c3):
        """Test Delta_1 of type C2 for a short gamma_1, with gamma_2 in Delta_2."""
        g = GammaSystem(roots(c3, "e1+e2", "2e3"))
        split = split_delta12(c3, choose_beta_system(c3, g), g)
        assert len(split.delta1) == 8
        assert strings(split.delta2.members) == ["2e3", "-2e3"]
        assert not split.gamma1_is_long

    def test_split_needs_gammas(self, c2):
        """Test Delta_1 is undefined without gammas."""
        g = GammaSystem()
        with pytest.raises(BetaSystemError):
            split_delta12(c2, choose_beta_system(c2, g), g)


class TestBetaSystemsExhaustive:
    """Tests for beta-systems of every ordered gamma-system up to rank 4."""

    @pytest.mark.parametrize("family, rank", [
        ("C", 1), ("C", 2), ("C", 3), ("C", 4), ("B", 2), ("B", 3), ("B", 4),
    ])
    def test_every_ordered_gamma_system(self, family, rank):
        """Test the beta-system is maximal and adapted to gamma_1, and Delta_1, Delta_2 split correctly."""
        rs = build_root_system(family, rank)
        noncompact = noncompact_positive_roots(rs)
        for system in enumerate_gamma_systems(rs):
            for ordered in itertools.permutations(system):
                g = GammaSystem(ordered)
                b = choose_beta_system(rs, g)
                betas = b.betas

                assert all(x in noncompact for x in betas)
                assert all(is_strongly_orthogonal(rs, x, y) for x, y in itertools.combinations(betas, 2))
                assert not [
                    r for r in noncompact
                    if r not in betas and all(is_strongly_orthogonal(rs, r, x) for x in betas)
                ]
                if not ordered:
                    continue

                gamma1, rest = ordered[0], ordered[1:]
                head = 1 if rs.is_long(gamma1) else 2
                assert b.gamma1_is_long == rs.is_long(gamma1)
                if b.gamma1_is_long:
                    assert betas[0] == gamma1
                else:
                    assert in_span(gamma1.coords, [betas[0].coords, betas[1].coords])
                tail = [x.coords for x in betas[head:]]
                assert all(in_span(gm.coords, tail) for gm in rest)

                split = split_delta12(rs, b, g)
                if b.gamma1_is_long:
                    assert split.delta1.members == frozenset({gamma1, -gamma1})
                else:
                    assert len(split.delta1) == 8
                    assert len({r.norm2 for r in split.delta1.members}) == 2
                assert all(gm in split.delta2 for gm in rest)
                assert all(
                    root_inner_product(r, a) == 0
                    for r in split.delta2.members for a in split.delta1.members
                )


class TestBoundaryOrbits:
    """Tests for the boundary orbits of the C2 claim orbits."""

    def test_long_gamma_is_dropped(self, c2, make):
        """Test S8 = (2e1; e) has first boundary orbit (; e)."""
        s1 = boundary_orbit_s1(make(c2, ["2e1"]))
        assert s1.gammas == ()
        assert s1.w.is_identity

    def test_second_boundary_of_s8(self, c2, make):
        """Test the mirrored construction gives (; -1,2) for S8."""
        s2 = boundary_orbit_s2(make(c2, ["2e1"]))
        assert s2.gammas == ()
        assert str(s2.w) == "-1,2"

    def test_open_orbit(self, c2, make):
        """Test both boundary orbits of S_op keep 2e2."""
        pair = boundary_pair_report(make(c2, ["2e1", "2e2"]))
        assert [str(g) for g in pair.s1.gammas] == ["2e2"]
        assert str(pair.s1.w) == "1,2"
        assert [str(g) for g in pair.s2.gammas] == ["2e2"]
        assert str(pair.s2.w) == "-1,2"
        assert pair.distinct

    def test_short_simple_gamma_is_dropped(self, c2, make):
        """Test S7 = (e1+e2; 1,-2): e1+e2 is simple in w Delta^+."""
        s1 = boundary_orbit_s1(make(c2, ["e1+e2"], "1,-2"))
        assert s1.gammas == ()
        assert s1.beta_prefix is None
        assert str(s1.w) == "1,-2"

    def test_short_nonsimple_gamma_gets_prefix(self, c2, make):
        """Test S10 = (e1+e2; e): e1+e2 = (e1-e2) + 2e2 is replaced by c_{2e2}."""
        s1 = boundary_orbit_s1(make(c2, ["e1+e2"]))
        assert s1.gammas == ()
        assert str(s1.beta_prefix) == "2e2"
        assert str(s1) == "c[2e2] (; w=1,2; Theta={})"

    def test_closed_orbit_rejected(self, c2, make):
        """Test boundary orbits of a closed orbit."""
        with pytest.raises(NotNonClosedError):
            boundary_orbit_s1(make(c2, [], "2,1"))

    def test_mirror_is_involution(self, c3, make):
        """Test mirroring twice is the identity."""
        d = make(c3, ["e1+e2"], "3,-1,2", ["e2-e3"])
        assert mirror_descriptor(mirror_descriptor(d)) == d
        assert mirror_descriptor(d).theta == d.theta


class TestPhiAndHolomorphic:
    """Tests for phi_image, is_holomorphic_type and enumerate_gamma_systems."""

    def test_phi_of_open_orbit(self, c2, make):
        """Test phi(S_op) = w_{2e1} w_{2e2} = -1."""
        assert str(phi_image(make(c2, ["2e1", "2e2"]))) == "-1,-2"

    def test_phi_is_conjugated_by_w(self, c2, make):
        """Test phi = w^-1 w_gamma w."""
        assert str(phi_image(make(c2, ["2e1"], "2,1"))) == "1,-2"

    @pytest.mark.parametrize("w, expected", [
        ("1,2", True),
        ("2,1", True),
        ("-1,-2", True),
        ("-2,-1", True),
        ("1,-2", False),
        ("-1,2", False),
    ])
    def test_holomorphic_type(self, c2, make, w, expected):
        """Test holomorphic type means w in W_K or W_K w0."""
        assert is_holomorphic_type(make(c2, [], w)) is expected

    @pytest.mark.parametrize("w", ["1,2", "1,-2"])
    def test_holomorphic_type_modulo_theta(self, c2, make, w):
        """Test w and w s_{2e2} name the same holomorphic orbit when Theta = {2e2}."""
        assert is_holomorphic_type(make(c2, [], w, theta=["2e2"]))

    def test_theta_coset_without_compact_element(self, c2, make):
        """Test the coset {1,-2; -2,1} modulo the compact reflection misses W_K and W_K w0."""
        assert not is_holomorphic_type(make(c2, [], "1,-2", theta=["e1-e2"]))

    def test_cayley_factors_are_not_holomorphic(self, c2, make):
        """Test descriptors with gammas are never of holomorphic type."""
        assert not is_holomorphic_type(make(c2, ["2e1"]))

    def test_gamma_systems_of_c2(self, c2):
        """Test the five strongly orthogonal systems of sp(2, R)."""
        systems = [[str(g) for g in s] for s in enumerate_gamma_systems(c2)]
        assert systems == [[], ["2e1"], ["e1+e2"], ["2e2"], ["2e1", "2e2"]]

    def test_gamma_systems_size_limit(self, c3):
        """Test max_size bounds the systems."""
        assert all(len(s) <= 1 for s in enumerate_gamma_systems(c3, max_size=1))
        assert max(len(s) for s in enumerate_gamma_systems(c3)) == 3

    def test_theta_z_pairing_is_exact(self, c2, make):
        """Test rational data survives normalization."""
        d = make(c2, ["2e1"], theta=["e1-e2"])
        assert normalize_descriptor(d).theta == frozenset(roots(c2, "e1-e2"))
        assert c2.pairing(Root.parse("e1+e2", 2), (Fraction(1, 2), Fraction(1, 2))) == 1
