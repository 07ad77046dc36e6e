"""
Pydantic schemas for orbitlab.
"""

from orbitlab.schemas.common import CamelModel, ErrorDetail, ErrorResponse
from orbitlab.schemas.descriptor import (
    BetaSystemModel,
    BoundaryResult,
    CertificateModel,
    CertifyResult,
    DeltaSplitModel,
    DescriptorModel,
    InequalityResult,
    NormalizeResult,
)
from orbitlab.schemas.roots import RootSystemResult, WeylElementModel, WeylResult
from orbitlab.schemas.sp2 import (
    BoundaryLabelsResult,
    BoundaryLabelsRow,
    ClassificationResult,
    DegenerationModel,
    DiagramEdgeModel,
    DiagramResult,
    DimensionsResult,
    DualityRowModel,
    DualityTableResult,
    FlagModel,
    LadderStepModel,
    LiftResult,
    SaturationModel,
    StrataResult,
    WitnessModel,
)

__all__ = [
    # Common
    "CamelModel",
    "ErrorDetail",
    "ErrorResponse",
    # Roots
    "RootSystemResult",
    "WeylElementModel",
    "WeylResult",
    # Descriptors
    "DescriptorModel",
    "NormalizeResult",
    "CertifyResult",
    "BetaSystemModel",
    "DeltaSplitModel",
    "BoundaryResult",
    "CertificateModel",
    "InequalityResult",
    # Sp(2)
    "FlagModel",
    "BoundaryLabelsRow",
    "BoundaryLabelsResult",
    "DegenerationModel",
    "ClassificationResult",
    "DualityRowModel",
    "DualityTableResult",
    "DiagramEdgeModel",
    "LadderStepModel",
    "DimensionsResult",
    "SaturationModel",
    "DiagramResult",
    "StrataResult",
    "WitnessModel",
    "LiftResult",
]
