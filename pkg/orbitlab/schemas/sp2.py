"""
Schemas for the Sp(2,C) verifier.
"""

from pydantic import Field

from orbitlab.schemas.common import CamelModel, ComplexPair


class FlagModel(CamelModel):
    """(V1, V2): v1 is 4 complex entries, V2 two columns of 4 complex entries."""

    v1: list[ComplexPair] = Field(..., min_length=4, max_length=4)
    v2: list[list[ComplexPair]] = Field(..., alias="V2", min_length=2, max_length=2)


class ClassificationResult(CamelModel):
    flag: FlagModel
    kc: str = Field(..., description="K_C-orbit label")
    gr: str = Field(..., description="G_R-orbit label")


class DualityRowModel(CamelModel):
    index: str
    element: str
    kc: str | None = None
    gr: str | None = None
    matched: bool
    error: str | None = None


class DualityTableResult(CamelModel):
    rows: list[DualityRowModel]
    matched: int = Field(..., ge=0)
    total: int = Field(..., ge=0)
    success: bool
    summary: str


class DiagramEdgeModel(CamelModel):
    source: str
    target: str
    parabolic: int = Field(..., ge=1, le=2)


class LadderStepModel(DiagramEdgeModel):
    source_dimension: int = Field(..., alias="sourceDimension")
    target_dimension: int = Field(..., alias="targetDimension")


class DimensionsResult(CamelModel):
    dimensions: dict[str, int]
    ladder: list[LadderStepModel]


class SaturationModel(CamelModel):
    edge: DiagramEdgeModel
    samples: int = Field(..., ge=0)
    counts: dict[str, int]
    degenerate: int = Field(..., ge=0)
    allowed: list[str]
    consistent: bool


class StrataResult(CamelModel):
    s2: float
    mirror: bool
    x: list[list[ComplexPair]] = Field(..., description="4x4 point of Sp(2,C), row-major")
    plus: int = Field(..., description="Stratum of xU+ (-1 outside)")
    minus: int = Field(..., description="Stratum of xU- under the opposite form")
    in_domain: bool = Field(..., alias="inDomain")


class WitnessModel(CamelModel):
    claim: str | None = None
    source: str
    target: str
    mirror: bool = False
    s2: float | None = None
    k: list[list[ComplexPair]] = Field(..., description="2x2 element of GL(2,C), row-major")
    violation: float = Field(..., ge=0)
    margins: dict[str, float]
    label: str | None = Field(default=None, description="G_R-orbit of the witness flag")
    start: int = Field(..., ge=0)
    evaluations: int = Field(..., ge=0)
    success: bool


class LiftResult(CamelModel):
    source: str
    sequence: list[int]
    path: list[str]


class DegenerationModel(CamelModel):
    """source lies in the closure of target, by a degeneration curve."""

    source: str
    target: str
    holds: bool


class DiagramResult(CamelModel):
    edges: list[DiagramEdgeModel]
    dot: str
    saturation: list[SaturationModel] | None = None
    degenerations: list[DegenerationModel] = Field(default_factory=list)


class BoundaryLabelsRow(CamelModel):
    source: str
    s1: str
    s2: str
    s1_descriptor: str = Field(..., alias="s1Descriptor")
    s2_descriptor: str = Field(..., alias="s2Descriptor")
    distinct: bool


class BoundaryLabelsResult(CamelModel):
    rows: list[BoundaryLabelsRow]
    consistent: bool
