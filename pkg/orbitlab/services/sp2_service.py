"""
Sp(2,C) verifier service.
"""

from orbitlab.core.logging import get_logger
from orbitlab.schemas.sp2 import (
    BoundaryLabelsResult,
    ClassificationResult,
    DiagramResult,
    DimensionsResult,
    DualityTableResult,
    LiftResult,
    StrataResult,
)
from orbitlab.services.base import BaseService
from orbitlab.sp2.combinatorics import EXPECTED_S1, EXPECTED_S2, boundary_labels, nonclosed_labels
from orbitlab.sp2.diagram import (
    CLOSURE_CHECKS,
    EDGES,
    closure_diagram,
    degeneration_check,
    dimension_ladder,
    lift_path,
    lift_sequence,
    saturation_check,
)
from orbitlab.sp2.dimensions import all_dimensions
from orbitlab.sp2.flags import Flag4, classify
from orbitlab.sp2.labels import OrbitLabel
from orbitlab.sp2.strata import boundary_point, boundary_strata, in_domain
from orbitlab.sp2.table import verify_duality_table
from orbitlab.wrappers import (
    complex_matrix,
    wrap_duality_report,
    wrap_edge,
    wrap_flag,
    wrap_saturation,
)

logger = get_logger("services.sp2")


class Sp2Service(BaseService):
    """Service for classification, table, diagram and strata checks on Sp(2,C)/B."""

    def classify(self, f: Flag4, tol: float | None = None) -> tuple[ClassificationResult, float]:
        """
        Raises:
            ValidationError: If the flag is not an isotropic flag
            DegenerateError: If a decision is ambiguous
        """
        def do_classify():
            kc_label, gr_label = classify(f.validate(tol), tol)
            return ClassificationResult.model_validate({
                "flag": wrap_flag(f).model_dump(by_alias=True),
                "kc": str(kc_label),
                "gr": str(gr_label),
            })

        return self.measure_time(do_classify)

    def verify_table(self, tol: float | None = None) -> tuple[DualityTableResult, float]:
        return self.measure_time(lambda: wrap_duality_report(verify_duality_table(tol)))

    def dimensions(self) -> tuple[DimensionsResult, float]:
        """
        Raises:
            VerificationError: If an edge does not raise the dimension by one
        """
        def do_dimensions():
            dims = all_dimensions()
            ladder = dimension_ladder()
            return DimensionsResult.model_validate({
                "dimensions": {str(label): d for label, d in dims.items()},
                "ladder": [
                    {**wrap_edge(e).model_dump(by_alias=True), "sourceDimension": lo, "targetDimension": hi}
                    for e, (lo, hi) in ladder.items()
                ],
            })

        return self.measure_time(do_dimensions)

    def diagram(
        self,
        saturate: bool = False,
        samples: int | None = None,
        seed: int | None = None,
    ) -> tuple[DiagramResult, float]:
        def do_diagram():
            edges, dot = closure_diagram()
            payload = {
                "edges": [wrap_edge(e).model_dump(by_alias=True) for e in edges],
                "dot": dot,
                "degenerations": [
                    {"source": str(s), "target": str(t), "holds": degeneration_check(s, t)}
                    for s, t in CLOSURE_CHECKS
                ],
            }
            if saturate:
                payload["saturation"] = [
                    wrap_saturation(saturation_check(e, samples, seed)).model_dump(by_alias=True)
                    for e in EDGES
                ]
            return DiagramResult.model_validate(payload)

        return self.measure_time(do_diagram)

    def boundary_labels(self) -> tuple[BoundaryLabelsResult, float]:
        """Boundary orbits of every non-closed K_C-orbit, checked against the five claim orbits."""
        def do_boundary_labels():
            rows = [boundary_labels(label) for label in nonclosed_labels()]
            consistent = all(
                (r.s1, r.s2) == (EXPECTED_S1[r.source], EXPECTED_S2[r.source])
                for r in rows if r.source in EXPECTED_S1
            )
            return BoundaryLabelsResult.model_validate({
                "rows": [
                    {
                        "source": str(r.source),
                        "s1": str(r.s1),
                        "s2": str(r.s2),
                        "s1Descriptor": str(r.s1_descriptor),
                        "s2Descriptor": str(r.s2_descriptor),
                        "distinct": r.distinct,
                    }
                    for r in rows
                ],
                "consistent": consistent,
            })

        return self.measure_time(do_boundary_labels)

    def strata(self, s2: float = 0.0, mirror: bool = False) -> tuple[StrataResult, float]:
        """
        Raises:
            ValidationError: If |s2| >= pi/4
        """
        def do_strata():
            x = boundary_point(s2, mirror)
            plus, minus = boundary_strata(x)
            return StrataResult.model_validate({
                "s2": s2,
                "mirror": mirror,
                "x": complex_matrix(x),
                "plus": int(plus),
                "minus": int(minus),
                "inDomain": in_domain(x),
            })

        return self.measure_time(do_strata)

    def lift(self, source: OrbitLabel) -> tuple[LiftResult, float]:
        """
        Raises:
            ValidationError: For S_op or a G_R-orbit
        """
        def do_lift():
            return LiftResult.model_validate({
                "source": str(source),
                "sequence": lift_sequence(source),
                "path": [str(label) for label in lift_path(source)],
            })

        return self.measure_time(do_lift)
