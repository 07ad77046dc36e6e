"""
Schemas for root systems and Weyl group elements.
"""

from pydantic import Field

from orbitlab.schemas.common import CamelModel, Rational


class RootSystemResult(CamelModel):
    """A root system of type B or C with its Hermitian data."""

    family: str = Field(..., description="B or C")
    rank: int = Field(..., ge=1)
    central_element: list[Rational] = Field(..., alias="z", description="Z in e-coordinates")
    count: int = Field(..., ge=0, description="Number of roots")
    roots: list[str] = Field(..., description="All roots, lexicographically decreasing")
    positive_roots: list[str] = Field(..., alias="positiveRoots")
    simple_roots: list[str] = Field(..., alias="simpleRoots")
    noncompact_positive: list[str] = Field(..., alias="noncompactPositive")
    compact: list[str] = Field(..., description="Roots with B(alpha, Z) = 0")


class WeylElementModel(CamelModel):
    """Signed permutation: e_i -> signs[i] e_{perm[i]} (1-based)."""

    text: str = Field(..., description="Signed images, e.g. \"1,-2\"")
    perm: list[int]
    signs: list[int]


class WeylResult(CamelModel):
    """W_Theta inside the Weyl group of a root system."""

    family: str
    rank: int = Field(..., ge=1)
    theta: list[str] = Field(default_factory=list)
    size: int = Field(..., ge=1, description="|W_Theta|")
    longest: WeylElementModel = Field(..., description="Longest element of the full Weyl group")
    elements: list[WeylElementModel] | None = Field(default=None, description="Listed on request")
    element: WeylElementModel | None = Field(default=None, description="The element passed with --w")
    inverse: WeylElementModel | None = None
    length: int | None = Field(default=None, ge=0, description="Positive roots sent to negative roots")
    image_of_simple_roots: list[str] | None = Field(default=None, alias="imageOfSimpleRoots")
