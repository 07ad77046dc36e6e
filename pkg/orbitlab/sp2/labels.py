"""
Names of the eleven K_C-orbits and eleven G_R-orbits on Sp(2,C)/B.
"""

from dataclasses import dataclass
from typing import Literal

from orbitlab.core.exceptions import ValidationError

Side = Literal["KC", "GR"]

INDICES: tuple[str, ...] = ("1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "op")


@dataclass(frozen=True)
class OrbitLabel:
    side: Side
    index: str

    def __post_init__(self):
        if self.side not in ("KC", "GR"):
            raise ValidationError(f"Unknown orbit side: {self.side}")
        if self.index not in INDICES:
            raise ValidationError(f"Unknown orbit index: {self.index}")

    @classmethod
    def parse(cls, text: str) -> "OrbitLabel":
        """Accepts "S3", "Sop", "S'8" (or the prime sign) and bare indices (K_C side)."""
        compact = text.strip().replace("′", "'")
        side: Side = "KC"
        if compact.startswith("S'"):
            side, compact = "GR", compact[2:]
        elif compact.startswith("S"):
            compact = compact[1:]
        return cls(side, compact)

    @property
    def dual(self) -> "OrbitLabel":
        return OrbitLabel("GR" if self.side == "KC" else "KC", self.index)

    @property
    def position(self) -> int:
        return INDICES.index(self.index)

    def __str__(self) -> str:
        return f"S'{self.index}" if self.side == "GR" else f"S{self.index}"


def kc(index: str | int) -> OrbitLabel:
    return OrbitLabel("KC", str(index))


def gr(index: str | int) -> OrbitLabel:
    return OrbitLabel("GR", str(index))


KC_LABELS: tuple[OrbitLabel, ...] = tuple(kc(i) for i in INDICES)
GR_LABELS: tuple[OrbitLabel, ...] = tuple(gr(i) for i in INDICES)
