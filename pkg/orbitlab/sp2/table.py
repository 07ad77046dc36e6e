"""
The duality table: one element g_j per index with K_C g_j B = S_j and G_R g_j B = S'_j.
"""

from dataclasses import dataclass

from orbitlab.core.exceptions import DegenerateError
from orbitlab.core.logging import get_logger
from orbitlab.sp2.flags import classify_gr, classify_kc, flag_of
from orbitlab.sp2.labels import KC_LABELS, OrbitLabel
from orbitlab.sp2.matrices import TABLE

logger = get_logger("sp2.table")


@dataclass(frozen=True)
class DualityRow:
    index: str
    element: str
    kc_label: OrbitLabel | None
    gr_label: OrbitLabel | None
    error: str | None = None

    @property
    def matched(self) -> bool:
        return (
            self.kc_label is not None
            and self.gr_label is not None
            and self.kc_label.index == self.index
            and self.gr_label.index == self.index
        )


@dataclass(frozen=True)
class DualityReport:
    rows: tuple[DualityRow, ...]

    @property
    def matched(self) -> int:
        return sum(row.matched for row in self.rows)

    @property
    def success(self) -> bool:
        return self.matched == len(self.rows)

    def failures(self) -> list[str]:
        return [row.index for row in self.rows if not row.matched]

    def summary(self) -> str:
        return f"{self.matched}/{len(self.rows)} matched"


def _row(label: OrbitLabel, tol: float | None) -> DualityRow:
    name, g = TABLE[label]
    f = flag_of(g)
    try:
        return DualityRow(label.index, name, classify_kc(f, tol), classify_gr(f, tol))
    except DegenerateError as e:
        return DualityRow(label.index, name, None, None, error=e.message)


def verify_duality_table(tol: float | None = None) -> DualityReport:
    """Classify every table element on both sides. Mismatches are reported, not raised."""
    report = DualityReport(tuple(_row(label, tol) for label in KC_LABELS))
    if not report.success:
        logger.warning(f"Duality table mismatches at indices {report.failures()}")
    return report
