"""
Weyl groups of types B and C as signed permutations.

An element w is stored as a 0-based permutation p and signs s with
w(e_i) = s_i e_{p(i)}. Serialized forms are 1-based.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from orbitlab.algebra.roots import (
    Root,
    RootSystem,
    format_vector,
    root_inner_product,
    to_vector,
    validate_theta,
    Vector,
)
from orbitlab.core.config import get_settings
from orbitlab.core.exceptions import EnumerationCapError, ValidationError
from orbitlab.core.logging import get_logger

logger = get_logger("algebra.weyl")


@dataclass(frozen=True)
class WeylElement:
    """Signed permutation acting on e-coordinates."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(int(i) for i in self.perm))
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValidationError(f"Not a permutation: {self.perm}")
        if len(self.signs) != len(self.perm) or any(s not in (1, -1) for s in self.signs):
            raise ValidationError(f"Signs must be +-1, one per coordinate: {self.signs}")

    @classmethod
    def identity(cls, rank: int) -> "WeylElement":
        return cls(tuple(range(rank)), (1,) * rank)

    @classmethod
    def from_one_based(cls, perm: Sequence[int], signs: Sequence[int]) -> "WeylElement":
        return cls(tuple(i - 1 for i in perm), tuple(signs))

    @classmethod
    def parse(cls, text: str, rank: int) -> "WeylElement":
        """
        Parse signed images such as "1,-2": entry i is +-(p(i)+1).

        "e" and "id" denote the identity.
        """
        compact = text.replace(" ", "")
        if compact in ("e", "id", ""):
            return cls.identity(rank)
        try:
            images = [int(part) for part in compact.split(",")]
        except ValueError:
            raise ValidationError(f"Cannot parse Weyl element: {text!r}")
        if len(images) != rank or any(i == 0 for i in images):
            raise ValidationError(f"Weyl element {text!r} must list {rank} nonzero signed images")
        return cls(tuple(abs(i) - 1 for i in images), tuple(1 if i > 0 else -1 for i in images))

    @property
    def rank(self) -> int:
        return len(self.perm)

    @property
    def is_identity(self) -> bool:
        return self == WeylElement.identity(self.rank)

    def one_based(self) -> tuple[list[int], list[int]]:
        return [p + 1 for p in self.perm], list(self.signs)

    def __matmul__(self, other: "WeylElement") -> "WeylElement":
        return compose(self, other)

    def __str__(self) -> str:
        return ",".join(f"{'-' if s < 0 else ''}{p + 1}" for p, s in zip(self.perm, self.signs))


def compose(u: WeylElement, v: WeylElement) -> WeylElement:
    """u o v, acting first by v."""
    if u.rank != v.rank:
        raise ValidationError(f"Rank mismatch: {u.rank} != {v.rank}")
    perm = tuple(u.perm[v.perm[i]] for i in range(v.rank))
    signs = tuple(v.signs[i] * u.signs[v.perm[i]] for i in range(v.rank))
    return WeylElement(perm, signs)


def inverse(u: WeylElement) -> WeylElement:
    perm = [0] * u.rank
    signs = [1] * u.rank
    for i, (p, s) in enumerate(zip(u.perm, u.signs)):
        perm[p] = i
        signs[p] = s
    return WeylElement(tuple(perm), tuple(signs))


def apply(u: WeylElement, vector: Sequence[Fraction] | Root) -> Vector:
    """Image of a vector (or the coordinates of a root)."""
    coords = vector.coords if isinstance(vector, Root) else to_vector(vector)
    if len(coords) != u.rank:
        raise ValidationError(f"Dimension mismatch: {len(coords)} != {u.rank}")
    image = [Fraction(0)] * u.rank
    for i, c in enumerate(coords):
        image[u.perm[i]] = u.signs[i] * c
    return tuple(image)


def apply_root(u: WeylElement, root: Root) -> Root:
    return Root(apply(u, root))


def product(elements: Iterable[WeylElement], rank: int) -> WeylElement:
    """Left-to-right product w_1 o w_2 o ... ."""
    result = WeylElement.identity(rank)
    for element in elements:
        result = compose(result, element)
    return result


def reflection(rs: RootSystem, gamma: Root) -> WeylElement:
    """
    The reflection v -> v - 2(v.gamma)/(gamma.gamma) gamma.

    Raises:
        NotARootError: If gamma is not a root of rs
    """
    gamma = rs.require_root(gamma)
    norm2 = gamma.norm2
    perm, signs = [], []
    for i in range(rs.rank):
        basis = [Fraction(0)] * rs.rank
        basis[i] = Fraction(1)
        factor = 2 * root_inner_product(basis, gamma.coords) / norm2
        image = [b - factor * g for b, g in zip(basis, gamma.coords)]
        (index,) = [j for j, c in enumerate(image) if c != 0]
        perm.append(index)
        signs.append(1 if image[index] > 0 else -1)
    return WeylElement(tuple(perm), tuple(signs))


def check_permutes_roots(u: WeylElement, rs: RootSystem) -> None:
    """
    Raises:
        ValidationError: If u does not map Delta onto itself
    """
    if u.rank != rs.rank:
        raise ValidationError(f"Weyl element of rank {u.rank} used with {rs}")
    stray = [str(r) for r in rs.roots if not rs.is_root(apply(u, r))]
    if stray:
        raise ValidationError(f"{u} does not permute the roots of {rs}: {stray[:3]}")


def act_on_positive_system(w: WeylElement, rs: RootSystem) -> frozenset[Root]:
    """w Delta^+."""
    return frozenset(apply_root(w, r) for r in rs.positive_roots)


def act_on_roots(w: WeylElement, roots: Iterable[Root]) -> frozenset[Root]:
    return frozenset(apply_root(w, r) for r in roots)


def longest_element(rs: RootSystem) -> WeylElement:
    """The unique w0 with w0 Delta^+ = -Delta^+; for types B and C this is -1."""
    w0 = WeylElement(tuple(range(rs.rank)), (-1,) * rs.rank)
    assert act_on_positive_system(w0, rs) == frozenset(-r for r in rs.positive_roots)
    return w0


def length(w: WeylElement, rs: RootSystem) -> int:
    """Number of positive roots sent to negative roots."""
    return sum(1 for r in rs.positive_roots if apply_root(w, r) not in rs.positive_roots)


@dataclass(frozen=True)
class ParabolicSubgroup:
    """W_Theta with its complete element list."""

    theta: frozenset[Root]
    elements: tuple[WeylElement, ...]

    def __contains__(self, w: object) -> bool:
        return w in self._members

    def __iter__(self) -> Iterator[WeylElement]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def _members(self) -> frozenset[WeylElement]:
        return frozenset(self.elements)


def enumerate_parabolic(
    rs: RootSystem,
    theta: Iterable[Root],
    cap: int | None = None,
) -> ParabolicSubgroup:
    """
    Enumerate W_Theta by breadth-first closure over the simple reflections in Theta.

    Args:
        rs: Root system
        theta: Subset of the simple roots
        cap: Maximum number of elements; defaults to settings.max_parabolic_size

    Raises:
        ValidationError: If Theta is not a subset of Psi
        EnumerationCapError: If the group has more than cap elements
    """
    theta = validate_theta(rs, theta)
    cap = cap if cap is not None else get_settings().max_parabolic_size

    generators = [reflection(rs, a) for a in sorted(theta, key=lambda r: format_vector(r.coords))]
    identity = WeylElement.identity(rs.rank)
    seen = {identity}
    ordered = [identity]
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for g in generators:
            candidate = compose(g, current)
            if candidate in seen:
                continue
            seen.add(candidate)
            ordered.append(candidate)
            if len(ordered) > cap:
                raise EnumerationCapError(cap)
            queue.append(candidate)

    logger.debug(f"Enumerated W_Theta of order {len(ordered)} for {rs}")
    return ParabolicSubgroup(theta=theta, elements=tuple(ordered))
