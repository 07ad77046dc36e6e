"""
Wrapper functions for converting library results to schemas.

This module provides conversion utilities between the exact and numerical
layers (algebra, sp2) and the JSON response schemas.
"""

from fractions import Fraction
from typing import Sequence

import numpy as np

from orbitlab.algebra.orbit_calculus import (
    BetaSystem,
    BoundaryPair,
    DeltaSplit,
    OrbitDescriptor,
    SeparationCertificate,
)
from orbitlab.algebra.roots import Root, RootSystem, compact_roots, format_rational, noncompact_positive_roots, sorted_roots
from orbitlab.algebra.weyl import WeylElement
from orbitlab.core.exceptions import OrbitLabException
from orbitlab.schemas.common import ErrorResponse
from orbitlab.schemas.descriptor import (
    BetaSystemModel,
    BoundaryResult,
    CertificateModel,
    DeltaSplitModel,
    DescriptorModel,
)
from orbitlab.schemas.roots import RootSystemResult, WeylElementModel
from orbitlab.schemas.sp2 import (
    DiagramEdgeModel,
    DualityTableResult,
    FlagModel,
    SaturationModel,
    WitnessModel,
)
from orbitlab.sp2.diagram import DiagramEdge, SaturationResult, saturation_allowed
from orbitlab.sp2.flags import Flag4
from orbitlab.sp2.search import Witness
from orbitlab.sp2.table import DualityReport


def root_strings(roots) -> list[str]:
    return [str(r) for r in sorted_roots(roots)]


def rational_strings(values: Sequence[Fraction]) -> list[str]:
    return [format_rational(v) for v in values]


def complex_pair(value: complex) -> list[float]:
    value = complex(value)
    return [float(value.real), float(value.imag)]


def complex_matrix(matrix: np.ndarray) -> list[list[list[float]]]:
    """Row-major nested [re, im] pairs."""
    return [[complex_pair(x) for x in row] for row in np.asarray(matrix)]


def parse_complex_pairs(values: Sequence[Sequence[float]]) -> np.ndarray:
    return np.array([complex(re, im) for re, im in values], dtype=complex)


def wrap_root_system(rs: RootSystem) -> RootSystemResult:
    """
    Convert a root system to its schema.

    Args:
        rs: Root system from build_root_system()

    Returns:
        RootSystemResult: Roots listed in lexicographically decreasing order
    """
    return RootSystemResult.model_validate({
        "family": rs.family,
        "rank": rs.rank,
        "z": rational_strings(rs.central_element),
        "count": len(rs.roots),
        "roots": root_strings(rs.roots),
        "positiveRoots": root_strings(rs.positive_roots),
        "simpleRoots": [str(a) for a in rs.simple_roots],
        "noncompactPositive": root_strings(noncompact_positive_roots(rs).members),
        "compact": root_strings(compact_roots(rs).members),
    })


def wrap_weyl_element(w: WeylElement) -> WeylElementModel:
    perm, signs = w.one_based()
    return WeylElementModel.model_validate({"text": str(w), "perm": perm, "signs": signs})


def wrap_descriptor(d: OrbitDescriptor, label: str | None = None) -> DescriptorModel:
    """
    Convert an orbit descriptor to its schema.

    Args:
        d: Descriptor
        label: Optional Sp(2) orbit label realized by d

    Returns:
        DescriptorModel: Gammas in stored order, Theta sorted
    """
    return DescriptorModel.model_validate({
        "gammas": [str(g) for g in d.gammas],
        "betaPrefix": str(d.beta_prefix) if d.beta_prefix is not None else None,
        "w": wrap_weyl_element(d.w).model_dump(by_alias=True),
        "theta": root_strings(d.theta),
        "label": label,
    })


def wrap_beta_system(b: BetaSystem) -> BetaSystemModel:
    return BetaSystemModel.model_validate({
        "betas": [str(x) for x in b.betas],
        "gamma1IsLong": b.gamma1_is_long,
    })


def wrap_delta_split(split: DeltaSplit) -> DeltaSplitModel:
    return DeltaSplitModel.model_validate({
        "delta1": root_strings(split.delta1.members),
        "delta2": root_strings(split.delta2.members),
    })


def wrap_boundary_pair(
    pair: BoundaryPair,
    beta_system: BetaSystem,
    split: DeltaSplit,
    labels: dict[str, str | None] | None = None,
) -> BoundaryResult:
    labels = labels or {}
    return BoundaryResult.model_validate({
        "source": wrap_descriptor(pair.source, labels.get("source")).model_dump(by_alias=True),
        "betaSystem": wrap_beta_system(beta_system).model_dump(by_alias=True),
        "split": wrap_delta_split(split).model_dump(by_alias=True),
        "s1": wrap_descriptor(pair.s1, labels.get("s1")).model_dump(by_alias=True),
        "s2": wrap_descriptor(pair.s2, labels.get("s2")).model_dump(by_alias=True),
        "distinct": pair.distinct,
    })


def wrap_certificate(cert: SeparationCertificate) -> CertificateModel:
    return CertificateModel.model_validate({
        "lhsValue": format_rational(cert.lhs_value),
        "maxRhsValue": format_rational(cert.max_rhs_value),
        "gap": format_rational(cert.gap),
        "closedFormGap": format_rational(cert.closed_form_gap),
        "kind": cert.kind,
        "valid": cert.valid,
    })


def wrap_flag(f: Flag4) -> FlagModel:
    return FlagModel.model_validate({
        "v1": [complex_pair(x) for x in f.v1],
        "V2": [[complex_pair(x) for x in f.v2[:, j]] for j in range(2)],
    })


def unwrap_flag(model: FlagModel) -> Flag4:
    """Inverse of wrap_flag; V2 is given column by column."""
    v1 = parse_complex_pairs(model.v1)
    v2 = np.column_stack([parse_complex_pairs(column) for column in model.v2])
    return Flag4(v1=v1, v2=v2)


def wrap_edge(edge: DiagramEdge) -> DiagramEdgeModel:
    return DiagramEdgeModel.model_validate({
        "source": str(edge.source),
        "target": str(edge.target),
        "parabolic": edge.parabolic,
    })


def wrap_saturation(result: SaturationResult) -> SaturationModel:
    order = sorted(result.counts, key=lambda label: label.position)
    return SaturationModel.model_validate({
        "edge": wrap_edge(result.edge).model_dump(by_alias=True),
        "samples": result.samples,
        "counts": {str(label): result.counts[label] for label in order},
        "degenerate": result.degenerate,
        "allowed": [str(label) for label in sorted(saturation_allowed(result.edge), key=lambda x: x.position)],
        "consistent": result.consistent,
    })


def wrap_duality_report(report: DualityReport) -> DualityTableResult:
    return DualityTableResult.model_validate({
        "rows": [
            {
                "index": row.index,
                "element": row.element,
                "kc": str(row.kc_label) if row.kc_label is not None else None,
                "gr": str(row.gr_label) if row.gr_label is not None else None,
                "matched": row.matched,
                "error": row.error,
            }
            for row in report.rows
        ],
        "matched": report.matched,
        "total": len(report.rows),
        "success": report.success,
        "summary": report.summary(),
    })


def wrap_witness(witness: Witness, mirror: bool = False, s2: float | None = None) -> WitnessModel:
    """
    Convert a search witness to its schema.

    Args:
        witness: Result of intersection_search()
        mirror: Whether the boundary point was the conjugate one
        s2: Boundary point parameter, when the search ran on boundary_point(s2)

    Returns:
        WitnessModel: k as a row-major 2x2 matrix of [re, im] pairs
    """
    return WitnessModel.model_validate({
        "claim": witness.claim,
        "source": str(witness.source),
        "target": str(witness.target),
        "mirror": mirror,
        "s2": s2,
        "k": complex_matrix(witness.k),
        "violation": witness.violation,
        "margins": dict(sorted(witness.margins.items())),
        "label": str(witness.label) if witness.label is not None else None,
        "start": witness.start,
        "evaluations": witness.evaluations,
        "success": witness.success,
    })


def wrap_error(exc: OrbitLabException) -> ErrorResponse:
    return ErrorResponse.model_validate({
        "success": False,
        "error": {"code": exc.code, "message": exc.message, "details": exc.details},
    })


def roots_of(rs: RootSystem, texts: Sequence[str]) -> list[Root]:
    """Parse root strings and require each to be a root of rs."""
    return [rs.require_root(Root.parse(t, rs.rank)) for t in texts]
