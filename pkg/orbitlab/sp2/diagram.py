"""
The closure diagram of K_C-orbits on Sp(2,C)/B.

An edge X -> Y labelled k records X P_k = Y P_k with dim Y = dim X + 1, where
P_1 is the Siegel parabolic Q and P_2 the parabolic of the long simple root.
The edge list is data; it is cross-checked by dimensions and by classifying
random points of X P_k.
"""

import re
from dataclasses import dataclass
from typing import Literal

import numpy as np
from scipy.linalg import expm

from orbitlab.core.config import get_settings
from orbitlab.core.exceptions import DegenerateError, ValidationError, VerificationError
from orbitlab.core.logging import get_logger
from orbitlab.sp2.dimensions import orbit_dimension
from orbitlab.sp2.flags import classify_kc, flag_of
from orbitlab.sp2.labels import OrbitLabel, kc
from orbitlab.sp2.matrices import N_DELTA, random_parabolic, representative

logger = get_logger("sp2.diagram")


@dataclass(frozen=True)
class DiagramEdge:
    source: OrbitLabel
    target: OrbitLabel
    parabolic: Literal[1, 2]

    def __str__(self) -> str:
        return f"{self.source} -{self.parabolic}-> {self.target}"


EDGES: tuple[DiagramEdge, ...] = (
    DiagramEdge(kc(1), kc(5), 2),
    DiagramEdge(kc(3), kc(5), 2),
    DiagramEdge(kc(3), kc(7), 1),
    DiagramEdge(kc(4), kc(7), 1),
    DiagramEdge(kc(4), kc(6), 2),
    DiagramEdge(kc(2), kc(6), 2),
    DiagramEdge(kc(5), kc(8), 1),
    DiagramEdge(kc(7), kc(10), 2),
    DiagramEdge(kc(6), kc(9), 1),
    DiagramEdge(kc(8), kc("op"), 2),
    DiagramEdge(kc(9), kc("op"), 2),
    DiagramEdge(kc(10), kc("op"), 1),
)

NODE_ORDER = ("S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8", "S9", "S10", "Sop")

_EDGE_LINE = re.compile(r'^\s*(S\w+)\s*->\s*(S\w+)\s*\[\s*label\s*=\s*"?([12])"?\s*\]\s*;?\s*$')


def closure_diagram() -> tuple[list[DiagramEdge], str]:
    edges = list(EDGES)
    return edges, to_dot(edges)


def to_dot(edges: list[DiagramEdge]) -> str:
    lines = ["digraph orbits {", "    rankdir=BT;"]
    for node in NODE_ORDER:
        lines.append(f"    {node};")
    for edge in edges:
        lines.append(f'    {edge.source} -> {edge.target} [label="{edge.parabolic}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_dot(text: str) -> list[DiagramEdge]:
    """
    Read back the edge list written by to_dot.

    Raises:
        ValidationError: If the text is not a digraph or an edge line is malformed
    """
    body = text.strip()
    if not body.startswith("digraph") or not body.endswith("}"):
        raise ValidationError("Not a DOT digraph")
    edges = []
    for line in body.splitlines():
        if "->" not in line:
            continue
        match = _EDGE_LINE.match(line)
        if match is None:
            raise ValidationError(f"Malformed DOT edge: {line.strip()}")
        source, target, label = match.groups()
        edges.append(DiagramEdge(OrbitLabel.parse(source), OrbitLabel.parse(target), int(label)))
    return edges


def outgoing(label: OrbitLabel) -> list[DiagramEdge]:
    return [e for e in EDGES if e.source == label]


def _next_edge(label: OrbitLabel) -> DiagramEdge:
    # P2 before P1, then the lower target in table order
    return max(outgoing(label), key=lambda e: (e.parabolic, -e.target.position))


def lift_sequence(source: OrbitLabel) -> list[int]:
    """
    Parabolic labels along a path from source up to the open orbit.

    Where an orbit has two outgoing edges the one labelled 2 is taken, so S3
    and S4 climb through S5 and S6. The path length is 4 - dim(source).
    """
    if source.side != "KC":
        raise ValidationError(f"Lift sequences start at a K_C-orbit, got {source}")
    if source == kc("op"):
        raise ValidationError("The open orbit has no lift sequence")
    steps = []
    current = source
    while current != kc("op"):
        edge = _next_edge(current)
        steps.append(edge.parabolic)
        current = edge.target
    return steps


def lift_path(source: OrbitLabel) -> list[OrbitLabel]:
    path = [source]
    for _ in lift_sequence(source):
        path.append(_next_edge(path[-1]).target)
    return path


def saturation_allowed(edge: DiagramEdge) -> frozenset[OrbitLabel]:
    """{Y} together with every Z -> Y carrying the same label."""
    return frozenset({edge.target} | {e.source for e in EDGES if e.target == edge.target and e.parabolic == edge.parabolic})


@dataclass(frozen=True)
class SaturationResult:
    edge: DiagramEdge
    samples: int
    counts: dict[OrbitLabel, int]
    degenerate: int

    @property
    def consistent(self) -> bool:
        """Some sample was classified and every classified sample is allowed."""
        allowed = saturation_allowed(self.edge)
        return sum(self.counts.values()) > 0 and all(label in allowed for label in self.counts)


def saturation_check(edge: DiagramEdge, samples: int | None = None, seed: int | None = None) -> SaturationResult:
    """Classify representative(X) p for random p in P_k."""
    settings = get_settings()
    samples = samples if samples is not None else settings.saturation_samples
    rng = np.random.default_rng(seed if seed is not None else settings.default_seed)
    g = representative(edge.source)

    counts: dict[OrbitLabel, int] = {}
    degenerate = 0
    for _ in range(samples):
        try:
            label = classify_kc(flag_of(g @ random_parabolic(rng, edge.parabolic)))
        except DegenerateError:
            degenerate += 1
            continue
        counts[label] = counts.get(label, 0) + 1

    if degenerate:
        logger.warning(f"{degenerate} degenerate samples while saturating {edge}")
    return SaturationResult(edge=edge, samples=samples, counts=counts, degenerate=degenerate)


def dimension_ladder() -> dict[DiagramEdge, tuple[int, int]]:
    """
    Raises:
        VerificationError: If some edge does not raise the dimension by one
    """
    ladder = {e: (orbit_dimension(e.source), orbit_dimension(e.target)) for e in EDGES}
    broken = [str(e) for e, (lo, hi) in ladder.items() if hi != lo + 1]
    if broken:
        raise VerificationError("Dimension does not increase by one along edges", {"edges": broken})
    return ladder


def degeneration_check(
    source: OrbitLabel,
    target: OrbitLabel,
    epsilons: tuple[float, ...] = (1e-1, 1e-2, 1e-3),
) -> bool:
    """
    True iff exp(eps N) representative(source) lies in target for every eps
    and in source at eps = 0, exhibiting source inside the closure of target.
    """
    g = representative(source)
    if classify_kc(flag_of(g)) != source:
        return False
    return all(classify_kc(flag_of(expm(eps * N_DELTA) @ g)) == target for eps in epsilons)


# Closure inclusions that are not single edges of the diagram
CLOSURE_CHECKS: tuple[tuple[OrbitLabel, OrbitLabel], ...] = ((kc(3), kc(7)), (kc(5), kc(10)))
