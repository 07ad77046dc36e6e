"""
Schemas for orbit descriptors and separation certificates.
"""

from pydantic import Field

from orbitlab.schemas.common import CamelModel, Rational
from orbitlab.schemas.roots import WeylElementModel


class DescriptorModel(CamelModel):
    """Symbolic orbit c_beta c_{gamma_1}...c_{gamma_k} w P."""

    gammas: list[str]
    beta_prefix: str | None = Field(default=None, alias="betaPrefix")
    w: WeylElementModel
    theta: list[str] = Field(default_factory=list)
    label: str | None = Field(default=None, description="Sp(2) K_C-orbit label, for C2 with empty Theta")


class NormalizeResult(CamelModel):
    source: DescriptorModel
    normalized: DescriptorModel


class CertifyResult(CamelModel):
    descriptor: DescriptorModel
    index: int | None = Field(default=None, description="First gamma outside w Delta_Theta (1-based)")
    non_closed: bool = Field(..., alias="nonClosed")


class BetaSystemModel(CamelModel):
    betas: list[str]
    gamma1_is_long: bool = Field(..., alias="gamma1IsLong")


class DeltaSplitModel(CamelModel):
    delta1: list[str]
    delta2: list[str]


class BoundaryResult(CamelModel):
    """Both boundary orbits of a non-closed orbit."""

    source: DescriptorModel
    beta_system: BetaSystemModel = Field(..., alias="betaSystem")
    split: DeltaSplitModel
    s1: DescriptorModel
    s2: DescriptorModel
    distinct: bool


class CertificateModel(CamelModel):
    lhs_value: Rational = Field(..., alias="lhsValue")
    max_rhs_value: Rational = Field(..., alias="maxRhsValue")
    gap: Rational
    closed_form_gap: Rational = Field(..., alias="closedFormGap")
    kind: str = Field(..., description="drop_gamma or cayley_prefix")
    valid: bool


class InequalityResult(CamelModel):
    descriptor: DescriptorModel
    boundary: DescriptorModel
    z: list[Rational]
    w_theta_size: int = Field(..., alias="wThetaSize", ge=1)
    certificate: CertificateModel
