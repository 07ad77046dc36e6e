"""
Combinatorial calculus of K_C-orbits on flag manifolds of Hermitian real forms.

A non-closed K_C-P double coset is described by (gamma_1..gamma_k, w, Theta):
the orbit of c_{gamma_1}...c_{gamma_k} w through the base point of G_C/P, where
the gammas are strongly orthogonal noncompact positive roots and Theta is the
set of simple roots defining P. This module normalizes such descriptors,
builds the beta-systems and Delta_1/Delta_2 splittings of the boundary
analysis, produces the two boundary orbits, and certifies the separation of
the original orbit from a boundary orbit by an exact comparison of values
B(Z, sigma Z) over W_Theta double cosets.
"""

import itertools
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Literal, Sequence

from orbitlab.algebra.roots import (
    Root,
    RootSubset,
    RootSystem,
    check_z_defines_theta,
    compact_roots,
    delta_theta,
    format_rational,
    in_span,
    is_strongly_orthogonal,
    noncompact_positive_roots,
    root_inner_product,
    simple_roots_of_positive_system,
    sorted_roots,
    subsystem_in_span,
    to_vector,
    validate_theta,
    Vector,
)
from orbitlab.algebra.weyl import (
    ParabolicSubgroup,
    WeylElement,
    act_on_positive_system,
    act_on_roots,
    apply,
    apply_root,
    check_permutes_roots,
    compose,
    enumerate_parabolic,
    inverse,
    longest_element,
    product,
    reflection,
)
from orbitlab.core.exceptions import (
    BetaSystemError,
    CertificateFailure,
    NotNonClosedError,
    ValidationError,
)
from orbitlab.core.logging import get_logger

logger = get_logger("algebra.orbit_calculus")

RealForm = Literal["sp", "so2odd", "equalLength"]
SeparationKind = Literal["drop_gamma", "cayley_prefix"]

_FAMILY_OF_FORM = {"sp": "C", "so2odd": "B"}


def default_real_form(rs: RootSystem) -> RealForm:
    return "sp" if rs.family == "C" else "so2odd"


def check_real_form(rs: RootSystem, real_form: str) -> RealForm:
    if real_form not in ("sp", "so2odd", "equalLength"):
        raise ValidationError(f"Unknown real form: {real_form}")
    expected = _FAMILY_OF_FORM.get(real_form)
    if expected is not None and rs.family != expected:
        raise ValidationError(f"Real form {real_form} requires a type {expected} root system, got {rs}")
    return real_form


@dataclass(frozen=True)
class GammaSystem:
    """Ordered strongly orthogonal system of noncompact positive roots."""

    gammas: tuple[Root, ...] = ()

    def __len__(self) -> int:
        return len(self.gammas)

    def __iter__(self):
        return iter(self.gammas)

    def validate(self, rs: RootSystem) -> None:
        """
        Raises:
            NotARootError: If some gamma is not a root
            ValidationError: If some gamma is not in Delta_n^+ or two gammas are not strongly orthogonal
        """
        noncompact = noncompact_positive_roots(rs)
        for gamma in self.gammas:
            rs.require_root(gamma)
            if gamma not in noncompact:
                raise ValidationError(f"{gamma} is not a noncompact positive root of {rs}")
        for a, b in itertools.combinations(self.gammas, 2):
            if not is_strongly_orthogonal(rs, a, b):
                raise ValidationError(f"{a} and {b} are not strongly orthogonal")


@dataclass(frozen=True)
class OrbitDescriptor:
    """
    Symbolic K_C-orbit c_beta c_{gamma_1}...c_{gamma_k} w P.

    The optional beta_prefix records the Cayley factor introduced by a
    boundary orbit in the non-simple short case; it is kept apart from the
    gammas and is not multiplied out.
    """

    root_system: RootSystem = field(repr=False)
    gamma: GammaSystem
    w: WeylElement
    theta: frozenset[Root] = frozenset()
    beta_prefix: Root | None = None

    def __post_init__(self):
        object.__setattr__(self, "theta", validate_theta(self.root_system, self.theta))
        check_permutes_roots(self.w, self.root_system)
        GammaSystem(self.effective_gammas).validate(self.root_system)

    @property
    def gammas(self) -> tuple[Root, ...]:
        return self.gamma.gammas

    @property
    def effective_gammas(self) -> tuple[Root, ...]:
        """Gammas with the beta prefix (if any) in front."""
        prefix = (self.beta_prefix,) if self.beta_prefix is not None else ()
        return prefix + self.gamma.gammas

    def signature(self) -> tuple:
        """(gamma multiset, w, Theta), the key descriptors are compared by."""
        return (frozenset(self.effective_gammas), self.w, self.theta)

    def __str__(self) -> str:
        prefix = f"c[{self.beta_prefix}] " if self.beta_prefix is not None else ""
        gammas = ", ".join(map(str, self.gammas))
        theta = ", ".join(str(a) for a in sorted_roots(self.theta))
        return f"{prefix}({gammas}; w={self.w}; Theta={{{theta}}})"


def make_descriptor(
    rs: RootSystem,
    gammas: Sequence[Root],
    w: WeylElement | None = None,
    theta: Sequence[Root] = (),
    beta_prefix: Root | None = None,
) -> OrbitDescriptor:
    return OrbitDescriptor(
        root_system=rs,
        gamma=GammaSystem(tuple(gammas)),
        w=w if w is not None else WeylElement.identity(rs.rank),
        theta=frozenset(theta),
        beta_prefix=beta_prefix,
    )


@dataclass(frozen=True)
class BetaSystem:
    """Maximal strongly orthogonal system adapted to a gamma-system."""

    betas: tuple[Root, ...]
    gamma1_is_long: bool

    def __len__(self) -> int:
        return len(self.betas)


@dataclass(frozen=True)
class DeltaSplit:
    delta1: RootSubset
    delta2: RootSubset
    gamma1_is_long: bool


@dataclass(frozen=True)
class SeparationCertificate:
    """Exact comparison of B(Z, sigma Z) between an orbit and its boundary orbit."""

    lhs_value: Fraction
    max_rhs_value: Fraction
    gap: Fraction
    closed_form_gap: Fraction
    kind: SeparationKind

    @property
    def valid(self) -> bool:
        return self.gap > 0


@dataclass(frozen=True)
class BoundaryPair:
    """The two boundary orbits of a non-closed orbit."""

    source: OrbitDescriptor
    s1: OrbitDescriptor
    s2: OrbitDescriptor

    @property
    def distinct(self) -> bool:
        return self.s1.signature() != self.s2.signature()


def _w_delta_theta(d: OrbitDescriptor) -> frozenset[Root]:
    return act_on_roots(d.w, delta_theta(d.root_system, d.theta).members)


def certify_nonclosed(d: OrbitDescriptor) -> int | None:
    """
    Smallest 1-based j with gamma_j outside w Delta_Theta.

    None means every gamma lies in w Delta_Theta, in which case the orbit is
    closed. Treating None as the exact characterization of closedness rests
    on the orbit parametrization, not on a proof here.
    """
    inside = _w_delta_theta(d)
    for j, gamma in enumerate(d.effective_gammas, start=1):
        if gamma not in inside:
            return j
    return None


def normalize_descriptor(d: OrbitDescriptor) -> OrbitDescriptor:
    """
    Bring gamma_1 outside w Delta_Theta and inside w Delta^+.

    The reordering of the gammas and the replacement of w by w_{gamma_1} w
    do not change the double coset. A beta prefix is folded into the gammas.

    Raises:
        NotNonClosedError: If every gamma lies in w Delta_Theta
    """
    rs = d.root_system
    j = certify_nonclosed(d)
    if j is None:
        raise NotNonClosedError(f"Every gamma of {d} lies in w Delta_Theta; the orbit is closed")

    gammas = list(d.effective_gammas)
    first = gammas.pop(j - 1)
    gammas.insert(0, first)

    w = d.w
    if first not in act_on_positive_system(w, rs):
        w = compose(reflection(rs, first), w)
        logger.debug(f"Replaced w by w_{first} w for {d}")

    return OrbitDescriptor(
        root_system=rs,
        gamma=GammaSystem(tuple(gammas)),
        w=w,
        theta=d.theta,
        beta_prefix=None,
    )


def _long_positions(betas: Sequence[Root], gammas: Sequence[Root], start: int) -> bool:
    """True iff every gamma lies in the span of betas[start:]."""
    basis = [b.coords for b in betas[start:]]
    return all(in_span(g.coords, basis) for g in gammas)


def _check_beta_system(rs: RootSystem, betas: tuple[Root, ...], g: GammaSystem) -> BetaSystem:
    noncompact = noncompact_positive_roots(rs)
    for b in betas:
        if b not in noncompact:
            raise BetaSystemError(f"beta {b} is not a noncompact positive root")
    for a, b in itertools.combinations(betas, 2):
        if not is_strongly_orthogonal(rs, a, b):
            raise BetaSystemError(f"betas {a} and {b} are not strongly orthogonal")
    extension = [r for r in noncompact if all(is_strongly_orthogonal(rs, r, b) for b in betas)]
    if extension:
        raise BetaSystemError(f"beta-system is not maximal: {extension[0]} can be added")

    if not g.gammas:
        return BetaSystem(betas, gamma1_is_long=True)

    gamma1 = g.gammas[0]
    if rs.is_long(gamma1):
        if betas[0] != gamma1 or not _long_positions(betas, g.gammas[1:], 1):
            raise BetaSystemError(f"beta-system {list(map(str, betas))} does not fit long {gamma1}")
        return BetaSystem(betas, gamma1_is_long=True)

    if len(betas) < 2 or not in_span(gamma1.coords, [betas[0].coords, betas[1].coords]) \
            or not _long_positions(betas, g.gammas[1:], 2):
        raise BetaSystemError(f"beta-system {list(map(str, betas))} does not fit short {gamma1}")
    return BetaSystem(betas, gamma1_is_long=False)


def _unit(rank: int, i: int, scale: int = 1) -> tuple[Fraction, ...]:
    return tuple(Fraction(scale) if j == i else Fraction(0) for j in range(rank))


def _support(root: Root) -> list[int]:
    return [i for i, c in enumerate(root.coords) if c != 0]


def choose_beta_system(rs: RootSystem, g: GammaSystem, real_form: str | None = None) -> BetaSystem:
    """
    Build a maximal strongly orthogonal system adapted to g.

    For a long gamma_1 the result starts with gamma_1 and the other gammas lie
    in the span of beta_2..beta_l. For a short gamma_1, gamma_1 lies in the
    span of beta_1, beta_2 and the other gammas in the span of beta_3..beta_l.

    Raises:
        ValidationError: If the real form does not match the root system or g is invalid
        BetaSystemError: If g violates the preconditions of its case
    """
    real_form = check_real_form(rs, real_form or default_real_form(rs))
    g.validate(rs)
    n = rs.rank

    if real_form == "sp":
        if g.gammas:
            gamma1 = g.gammas[0]
            support = _support(gamma1)
            if rs.is_long(gamma1):
                r = support[0]
                order = [r] + [s for s in range(n) if s != r]
            else:
                r, s = support
                order = [r, s] + [p for p in range(n) if p not in (r, s)]
        else:
            order = list(range(n))
        betas = tuple(Root(_unit(n, i, 2)) for i in order)

    elif real_form == "so2odd":
        if len(g.gammas) > 2:
            raise BetaSystemError("so(2, odd) admits at most two strongly orthogonal noncompact roots")
        if n == 1:
            betas = (Root(_unit(1, 0)),)
        elif not g.gammas:
            e1, e2 = _unit(n, 0), _unit(n, 1)
            betas = (Root(tuple(a + b for a, b in zip(e1, e2))), Root(tuple(a - b for a, b in zip(e1, e2))))
        else:
            gamma1 = g.gammas[0]
            if rs.is_long(gamma1):
                partner = Root(tuple(c if i == 0 else -c for i, c in enumerate(gamma1.coords)))
                betas = (gamma1, partner)
            else:
                e1, e2 = _unit(n, 0), _unit(n, 1)
                betas = (Root(tuple(a + b for a, b in zip(e1, e2))), Root(tuple(a - b for a, b in zip(e1, e2))))

    else:
        short = [str(gm) for gm in g.gammas if not rs.is_long(gm)]
        if short:
            raise BetaSystemError(f"Short roots {short} in an equal-length real form")
        betas = tuple(g.gammas)
        for candidate in sorted_roots(noncompact_positive_roots(rs)):
            if candidate not in betas and all(is_strongly_orthogonal(rs, candidate, b) for b in betas):
                betas += (candidate,)

    result = _check_beta_system(rs, betas, g)
    logger.debug(f"beta-system for {[str(x) for x in g.gammas]}: {[str(b) for b in result.betas]}")
    return result


def split_delta12(rs: RootSystem, b: BetaSystem, g: GammaSystem) -> DeltaSplit:
    """
    Delta_1 = {+-gamma_1} (long gamma_1) or Delta meet span(beta_1, beta_2) (short gamma_1);
    Delta_2 = roots orthogonal to Delta_1.

    Raises:
        BetaSystemError: If the short-case Delta_1 is not of type C_2 or some
            gamma_j (j >= 2) is not in Delta_2
    """
    if not g.gammas:
        raise BetaSystemError("Delta_1 is defined only for a nonempty gamma-system")
    gamma1 = g.gammas[0]
    if b.gamma1_is_long:
        delta1 = frozenset({gamma1, -gamma1})
    else:
        delta1 = subsystem_in_span(rs, [b.betas[0].coords, b.betas[1].coords])
        lengths = {r.norm2 for r in delta1}
        if len(delta1) != 8 or len(lengths) != 2:
            raise BetaSystemError(f"Delta_1 of size {len(delta1)} is not of type C2")

    delta2 = frozenset(
        r for r in rs.roots
        if all(root_inner_product(r, a) == 0 for a in delta1)
    )
    stray = [str(gm) for gm in g.gammas[1:] if gm not in delta2]
    if stray:
        raise BetaSystemError(f"gammas {stray} are not in Delta_2")

    return DeltaSplit(
        delta1=RootSubset(rs, delta1, "delta_1"),
        delta2=RootSubset(rs, delta2, "delta_2"),
        gamma1_is_long=b.gamma1_is_long,
    )


def boundary_orbit_s1(d: OrbitDescriptor, real_form: str | None = None) -> OrbitDescriptor:
    """
    The boundary orbit obtained by removing the first Cayley factor.

    Long gamma_1: drop it. Short gamma_1: drop it when it is simple in
    Delta_1^+ = Delta_1 meet w Delta^+, otherwise replace it by c_beta with
    beta the long simple root of Delta_1^+.

    Raises:
        NotNonClosedError: If d describes a closed orbit
    """
    rs = d.root_system
    n = normalize_descriptor(d)
    beta_system = choose_beta_system(rs, n.gamma, real_form)
    split = split_delta12(rs, beta_system, n.gamma)
    gamma1, rest = n.gammas[0], n.gammas[1:]

    if split.gamma1_is_long:
        return replace(n, gamma=GammaSystem(rest))

    positive1 = split.delta1.members & act_on_positive_system(n.w, rs)
    simple1 = simple_roots_of_positive_system(rs, positive1)
    if gamma1 in simple1:
        return replace(n, gamma=GammaSystem(rest))

    long_simple = [a for a in simple1 if a.norm2 == max(r.norm2 for r in split.delta1.members)]
    if len(long_simple) != 1:
        raise BetaSystemError(f"Delta_1^+ has {len(long_simple)} long simple roots")
    beta = long_simple[0]
    logger.debug(f"Non-simple short {gamma1}: prefix c_{beta}")
    return replace(n, gamma=GammaSystem(rest), beta_prefix=beta)


def mirror_descriptor(d: OrbitDescriptor) -> OrbitDescriptor:
    """
    Image under the conjugation of G_C with respect to G_R.

    (gammas, w, Theta) -> (gammas, w w0, -w0 Theta).
    """
    rs = d.root_system
    w0 = longest_element(rs)
    theta = frozenset(-apply_root(w0, a) for a in d.theta)
    return replace(d, w=compose(d.w, w0), theta=theta)


def boundary_orbit_s2(d: OrbitDescriptor, real_form: str | None = None) -> OrbitDescriptor:
    """Second boundary orbit: the first one computed on the conjugate side and mirrored back."""
    return mirror_descriptor(boundary_orbit_s1(normalize_descriptor(mirror_descriptor(d)), real_form))


def boundary_pair_report(d: OrbitDescriptor, real_form: str | None = None) -> BoundaryPair:
    pair = BoundaryPair(
        source=normalize_descriptor(d),
        s1=boundary_orbit_s1(d, real_form),
        s2=boundary_orbit_s2(d, real_form),
    )
    logger.info(f"Boundary orbits of {d}: {pair.s1} / {pair.s2} (distinct={pair.distinct})")
    return pair


def phi_image(d: OrbitDescriptor) -> WeylElement:
    """w^-1 [w_beta] w_{gamma_1}...w_{gamma_k} w."""
    rs = d.root_system
    reflections = [reflection(rs, gm) for gm in d.effective_gammas]
    return product([inverse(d.w), *reflections, d.w], rs.rank)


def _pairing(z: Vector, sigma: WeylElement) -> Fraction:
    return root_inner_product(z, apply(sigma, z))


def separation_inequality(
    d: OrbitDescriptor,
    d_tilde: OrbitDescriptor,
    z: Sequence[Fraction],
    w_theta: ParabolicSubgroup | None = None,
) -> SeparationCertificate:
    """
    Certify that phi(d_tilde) is not in W_Theta phi(d) W_Theta.

    lhs = B(Z, phi(d_tilde) Z); max_rhs = max over W_Theta x W_Theta of
    B(Z, w1 phi(d) w2 Z). The gap must be positive and equal to the closed
    form 2B(gamma_1, wZ)^2/B(gamma_1, gamma_1), minus 2B(beta, wZ)^2/B(beta, beta)
    when d_tilde carries a beta prefix.

    Raises:
        ValidationError: If Z does not define Theta or W_Theta belongs to another Theta
        CertificateFailure: If the gap is not positive or differs from the closed form
    """
    rs = d.root_system
    n = normalize_descriptor(d)
    z = to_vector(z)
    check_z_defines_theta(rs, z, n.theta)
    if w_theta is None:
        w_theta = enumerate_parabolic(rs, n.theta)
    elif w_theta.theta != n.theta:
        raise ValidationError("W_Theta does not match the Theta of the descriptor")

    sigma = phi_image(n)
    sigma_tilde = phi_image(d_tilde)
    lhs = _pairing(z, sigma_tilde)
    max_rhs = max(
        _pairing(z, compose(compose(w1, sigma), w2))
        for w1 in w_theta for w2 in w_theta
    )
    gap = lhs - max_rhs

    wz = apply(n.w, z)
    gamma1 = n.gammas[0]
    closed_form = 2 * root_inner_product(gamma1, wz) ** 2 / gamma1.norm2
    kind: SeparationKind = "drop_gamma"
    details = {
        "descriptor": str(n),
        "boundary": str(d_tilde),
        "lhs": format_rational(lhs),
        "maxRhs": format_rational(max_rhs),
        "gap": format_rational(gap),
    }

    if d_tilde.beta_prefix is not None:
        kind = "cayley_prefix"
        beta = d_tilde.beta_prefix
        beta_wz = root_inner_product(beta, wz)
        gamma_wz = root_inner_product(gamma1, wz)
        if not 0 <= beta_wz <= gamma_wz or beta.norm2 != 2 * gamma1.norm2:
            raise CertificateFailure("Hypotheses of the two-term bound fail", details)
        closed_form -= 2 * beta_wz ** 2 / beta.norm2

    details["closedForm"] = format_rational(closed_form)
    if gap <= 0:
        raise CertificateFailure("Separation gap is not positive", details)
    if gap != closed_form:
        raise CertificateFailure("Separation gap differs from its closed form", details)

    return SeparationCertificate(
        lhs_value=lhs,
        max_rhs_value=max_rhs,
        gap=gap,
        closed_form_gap=closed_form,
        kind=kind,
    )


def is_holomorphic_type(d: OrbitDescriptor) -> bool:
    """True iff d has no Cayley factors and the coset w W_Theta meets W_K or W_K w0."""
    if d.effective_gammas:
        return False
    rs = d.root_system
    compact = compact_roots(rs)
    theta_k = frozenset(a for a in rs.simple_roots if a in compact)
    w_k = enumerate_parabolic(rs, theta_k)
    w0 = longest_element(rs)
    return any(
        compose(d.w, u) in w_k or compose(compose(d.w, u), w0) in w_k
        for u in enumerate_parabolic(rs, d.theta)
    )


def enumerate_gamma_systems(rs: RootSystem, max_size: int | None = None) -> list[tuple[Root, ...]]:
    """All strongly orthogonal subsets of Delta_n^+, each listed in sorted order."""
    noncompact = sorted_roots(noncompact_positive_roots(rs))
    limit = rs.rank if max_size is None else max_size
    systems: list[tuple[Root, ...]] = [()]
    for size in range(1, limit + 1):
        for combo in itertools.combinations(noncompact, size):
            if all(is_strongly_orthogonal(rs, a, b) for a, b in itertools.combinations(combo, 2)):
                systems.append(combo)
    return systems
