"""
Root systems of types B and C in exact rational arithmetic.

Roots are stored by their coordinates in the orthonormal basis e_1..e_n of
j*. The pairing of a root with an element of j (the central element Z, a
coweight) is the Euclidean dot product, which is a positive multiple of the
Killing form on a simple algebra.
"""

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Literal, Sequence

import sympy

from orbitlab.core.exceptions import InvalidPositiveSystemError, NotARootError, ValidationError
from orbitlab.core.logging import get_logger

logger = get_logger("algebra.roots")

Family = Literal["B", "C"]
SubsetTag = Literal["delta_n_plus", "delta_theta", "delta_1", "delta_2", "custom"]
Vector = tuple[Fraction, ...]

_TERM_PATTERN = re.compile(r"([+-]?)(\d+(?:/\d+)?)?e(\d+)")


def to_vector(values: Iterable) -> Vector:
    """Convert numbers or rational strings to an exact vector."""
    return tuple(Fraction(v) for v in values)


def vec_add(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vec_scale(c: Fraction, a: Sequence[Fraction]) -> Vector:
    return tuple(c * x for x in a)


def format_rational(value: Fraction) -> str:
    """Render a rational as "p/q" (or "p" when integral)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_vector(coords: Sequence[Fraction]) -> str:
    """Render a vector as a linear combination such as "e1+e2" or "-2e2"."""
    terms = []
    for index, coefficient in enumerate(coords, start=1):
        if coefficient == 0:
            continue
        magnitude = abs(coefficient)
        sign = "-" if coefficient < 0 else ("+" if terms else "")
        prefix = "" if magnitude == 1 else format_rational(magnitude)
        terms.append(f"{sign}{prefix}e{index}")
    return "".join(terms) if terms else "0"


def parse_vector(text: str, rank: int) -> Vector:
    """
    Parse a string such as "2e1", "e1-e2" or "-2e2" into coordinates.

    Raises:
        ValidationError: If the string is malformed or mentions e_i with i > rank
    """
    compact = text.replace(" ", "")
    if not compact:
        raise ValidationError("Empty root string")
    coords = [Fraction(0)] * rank
    position = 0
    for match in _TERM_PATTERN.finditer(compact):
        if match.start() != position:
            raise ValidationError(f"Cannot parse root string: {text!r}")
        sign, coefficient, index = match.groups()
        i = int(index)
        if not 1 <= i <= rank:
            raise ValidationError(f"Coordinate e{i} out of range for rank {rank} in {text!r}")
        value = Fraction(coefficient) if coefficient else Fraction(1)
        coords[i - 1] += -value if sign == "-" else value
        position = match.end()
    if position != len(compact):
        raise ValidationError(f"Cannot parse root string: {text!r}")
    return tuple(coords)


def root_inner_product(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    """
    Exact dot product, standing in for the Killing form on j.

    Raises:
        ValidationError: If the dimensions differ
    """
    if isinstance(a, Root):
        a = a.coords
    if isinstance(b, Root):
        b = b.coords
    if len(a) != len(b):
        raise ValidationError(f"Dimension mismatch: {len(a)} != {len(b)}")
    return sum((Fraction(x) * Fraction(y) for x, y in zip(a, b)), Fraction(0))


@dataclass(frozen=True)
class Root:
    """A nonzero vector of the root lattice."""

    coords: Vector

    def __post_init__(self):
        object.__setattr__(self, "coords", to_vector(self.coords))
        if all(c == 0 for c in self.coords):
            raise ValidationError("A root must be nonzero")

    @classmethod
    def parse(cls, text: str, rank: int) -> "Root":
        return cls(parse_vector(text, rank))

    @property
    def rank(self) -> int:
        return len(self.coords)

    @property
    def norm2(self) -> Fraction:
        return root_inner_product(self.coords, self.coords)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coords))

    def __str__(self) -> str:
        return format_vector(self.coords)

    def __repr__(self) -> str:
        return f"Root({format_vector(self.coords)})"


def sort_key(root: Root) -> tuple:
    """Lexicographically decreasing order of coordinates."""
    return tuple(-c for c in root.coords)


def sorted_roots(roots: Iterable[Root]) -> list[Root]:
    return sorted(roots, key=sort_key)


def _to_fraction(value: sympy.Rational) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _span_rank(vectors: Sequence[Sequence[Fraction]]) -> int:
    if not vectors:
        return 0
    return sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) for c in v] for v in vectors]).rank()


@dataclass(frozen=True)
class RootSystem:
    """Full root system with its standard positive system and central element Z."""

    family: Family
    rank: int
    roots: frozenset[Root]
    positive_roots: frozenset[Root]
    simple_roots: tuple[Root, ...]
    central_element: Vector = field(default=())

    @cached_property
    def _coordinate_set(self) -> frozenset[Vector]:
        return frozenset(r.coords for r in self.roots)

    @cached_property
    def max_norm2(self) -> Fraction:
        return max(r.norm2 for r in self.roots)

    @cached_property
    def _simple_matrix_inverse(self) -> sympy.Matrix:
        rows = [[sympy.Rational(c.numerator, c.denominator) for c in a.coords] for a in self.simple_roots]
        return sympy.Matrix(rows).inv()

    def is_root(self, vector: Sequence[Fraction] | Root) -> bool:
        coords = vector.coords if isinstance(vector, Root) else to_vector(vector)
        return coords in self._coordinate_set

    def require_root(self, vector: Sequence[Fraction] | Root) -> Root:
        """Return the root with these coordinates or raise NotARootError."""
        root = vector if isinstance(vector, Root) else None
        coords = vector.coords if isinstance(vector, Root) else to_vector(vector)
        if len(coords) != self.rank or coords not in self._coordinate_set:
            raise NotARootError(format_vector(coords), f"{self.family}{self.rank}")
        return root or Root(coords)

    def is_long(self, root: Root) -> bool:
        return root.norm2 == self.max_norm2

    def pairing(self, vector: Sequence[Fraction] | Root, z: Sequence[Fraction] | None = None) -> Fraction:
        """alpha(Z) for the central element (or a supplied coweight)."""
        return root_inner_product(vector, self.central_element if z is None else z)

    def simple_coefficients(self, vector: Sequence[Fraction] | Root) -> Vector:
        """Coefficients of a vector in the basis of simple roots."""
        coords = vector.coords if isinstance(vector, Root) else to_vector(vector)
        column = sympy.Matrix([sympy.Rational(c.numerator, c.denominator) for c in coords])
        solution = self._simple_matrix_inverse.T * column
        return tuple(_to_fraction(x) for x in solution)

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class RootSubset:
    """A tagged subset of a root system (Delta_n^+, Delta_Theta, Delta_1, ...)."""

    parent: RootSystem
    members: frozenset[Root]
    tag: SubsetTag = "custom"

    def __post_init__(self):
        stray = [r for r in self.members if not self.parent.is_root(r)]
        if stray:
            raise NotARootError(", ".join(map(str, stray)), str(self.parent))

    def __contains__(self, root: object) -> bool:
        return root in self.members

    def __iter__(self):
        return iter(sorted_roots(self.members))

    def __len__(self) -> int:
        return len(self.members)


def _standard_tables(family: Family, rank: int) -> tuple[set[Vector], set[Vector], list[Vector]]:
    def unit(i: int, scale: int = 1) -> list[Fraction]:
        v = [Fraction(0)] * rank
        v[i] = Fraction(scale)
        return v

    positive: set[Vector] = set()
    for r, s in itertools.combinations(range(rank), 2):
        positive.add(tuple(a + b for a, b in zip(unit(r), unit(s))))
        positive.add(tuple(a - b for a, b in zip(unit(r), unit(s))))
    long_or_short = 2 if family == "C" else 1
    for r in range(rank):
        positive.add(tuple(unit(r, long_or_short)))

    simple = [tuple(a - b for a, b in zip(unit(i), unit(i + 1))) for i in range(rank - 1)]
    simple.append(tuple(unit(rank - 1, long_or_short)))

    roots = positive | {tuple(-c for c in v) for v in positive}
    return roots, positive, simple


def default_central_element(family: Family, rank: int) -> Vector:
    """Z for sp(rank, R) (family C) or so(2, 2rank-1) (family B)."""
    if family == "C":
        return tuple(Fraction(1) for _ in range(rank))
    return tuple(Fraction(1) if i == 0 else Fraction(0) for i in range(rank))


def build_root_system(family: str, rank: int, z: Iterable | None = None) -> RootSystem:
    """
    Build the root system of type B_rank or C_rank with its standard positive system.

    Args:
        family: "B" or "C"
        rank: Positive rank
        z: Central element Z in e-coordinates; defaults to the Hermitian Z of the family

    Returns:
        RootSystem with Delta, Delta^+, Psi and Z

    Raises:
        ValidationError: If the family/rank is invalid or Z is not dominant
    """
    family = family.upper()
    if family not in ("B", "C"):
        raise ValidationError(f"Unsupported root system family: {family}")
    if rank < 1:
        raise ValidationError(f"Rank must be positive, got {rank}")

    central = default_central_element(family, rank) if z is None else to_vector(z)
    if len(central) != rank:
        raise ValidationError(f"Z has dimension {len(central)}, expected {rank}")

    roots, positive, simple = _standard_tables(family, rank)
    negative_pairings = [format_vector(a) for a in simple if root_inner_product(a, central) < 0]
    if negative_pairings:
        raise ValidationError(
            f"Z={[format_rational(c) for c in central]} is not dominant: "
            f"negative on simple roots {negative_pairings}"
        )

    rs = RootSystem(
        family=family,
        rank=rank,
        roots=frozenset(Root(v) for v in roots),
        positive_roots=frozenset(Root(v) for v in positive),
        simple_roots=tuple(Root(v) for v in simple),
        central_element=central,
    )
    logger.debug(f"Built {rs} with {len(rs.roots)} roots")
    return rs


def noncompact_positive_roots(rs: RootSystem) -> RootSubset:
    """Delta_n^+ = {alpha in Delta | alpha(Z) > 0}."""
    members = frozenset(r for r in rs.roots if rs.pairing(r) > 0)
    return RootSubset(rs, members, "delta_n_plus")


def compact_roots(rs: RootSystem) -> RootSubset:
    """Roots vanishing on Z."""
    return RootSubset(rs, frozenset(r for r in rs.roots if rs.pairing(r) == 0), "custom")


def is_strongly_orthogonal(rs: RootSystem, a: Root, b: Root) -> bool:
    """
    True iff neither a+b nor a-b is a root.

    A root is never strongly orthogonal to itself or to its negative.
    """
    rs.require_root(a)
    rs.require_root(b)
    if a == b or a == -b:
        return False
    return not rs.is_root(vec_add(a.coords, b.coords)) and not rs.is_root(vec_sub(a.coords, b.coords))


def validate_theta(rs: RootSystem, theta: Iterable[Root]) -> frozenset[Root]:
    theta = frozenset(theta)
    outside = [str(a) for a in theta if a not in rs.simple_roots]
    if outside:
        raise ValidationError(f"Theta must consist of simple roots; got {outside}")
    return theta


def delta_theta(rs: RootSystem, theta: Iterable[Root]) -> RootSubset:
    """All roots that are integer combinations of Theta."""
    theta = validate_theta(rs, theta)
    excluded = [i for i, a in enumerate(rs.simple_roots) if a not in theta]
    members = frozenset(
        r for r in rs.roots
        if all(rs.simple_coefficients(r)[i] == 0 for i in excluded)
    )
    return RootSubset(rs, members, "delta_theta")


def in_span(vector: Sequence[Fraction], basis: Sequence[Sequence[Fraction]]) -> bool:
    """Exact test of vector in the rational span of basis."""
    if not basis:
        return all(c == 0 for c in vector)
    return _span_rank(list(basis) + [vector]) == _span_rank(list(basis))


def subsystem_in_span(rs: RootSystem, vectors: Sequence[Sequence[Fraction]]) -> frozenset[Root]:
    """Delta intersected with the span of the given vectors."""
    return frozenset(r for r in rs.roots if in_span(r.coords, vectors))


def simple_roots_of_positive_system(rs: RootSystem, positive: Iterable[Root]) -> frozenset[Root]:
    """
    Indecomposable elements of a positive system of the subsystem it spans.

    Raises:
        InvalidPositiveSystemError: If the set is not a positive system
    """
    positive = frozenset(positive)
    if not positive:
        raise InvalidPositiveSystemError("Empty set is not a positive system")
    for r in positive:
        if not rs.is_root(r):
            raise InvalidPositiveSystemError(f"{r} is not a root of {rs}")

    spanned = subsystem_in_span(rs, [r.coords for r in positive])
    for r in spanned:
        if (r in positive) == (-r in positive):
            raise InvalidPositiveSystemError(
                f"Exactly one of +-{r} must belong to the positive system"
            )
    for a, b in itertools.combinations(positive, 2):
        total = vec_add(a.coords, b.coords)
        if rs.is_root(total) and Root(total) not in positive:
            raise InvalidPositiveSystemError(f"{a} + {b} is a root outside the positive system")

    decomposable = {
        Root(vec_add(a.coords, b.coords))
        for a, b in itertools.combinations(positive, 2)
        if rs.is_root(vec_add(a.coords, b.coords))
    }
    return frozenset(positive - decomposable)


def z_for_theta(rs: RootSystem, theta: Iterable[Root]) -> Vector:
    """
    Sum of the fundamental coweights of Psi minus Theta.

    The result is dominant and vanishes exactly on Theta among the simple roots.
    """
    theta = validate_theta(rs, theta)
    indicator = sympy.Matrix([0 if a in theta else 1 for a in rs.simple_roots])
    solution = rs._simple_matrix_inverse * indicator
    return tuple(_to_fraction(x) for x in solution)


def check_z_defines_theta(rs: RootSystem, z: Sequence[Fraction], theta: Iterable[Root]) -> None:
    """
    Raises:
        ValidationError: Unless Z is dominant with {alpha in Psi | alpha(Z)=0} = Theta
    """
    theta = validate_theta(rs, theta)
    z = to_vector(z)
    if len(z) != rs.rank:
        raise ValidationError(f"Z has dimension {len(z)}, expected {rs.rank}")
    pairings = {a: root_inner_product(a, z) for a in rs.simple_roots}
    if any(v < 0 for v in pairings.values()):
        raise ValidationError("Z is not dominant")
    vanishing = frozenset(a for a, v in pairings.items() if v == 0)
    if vanishing != theta:
        raise ValidationError(
            f"Z vanishes on {sorted(map(str, vanishing))}, expected Theta={sorted(map(str, theta))}"
        )
