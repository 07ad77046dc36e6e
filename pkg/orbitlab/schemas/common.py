"""
Common Pydantic schemas for orbitlab.

Rationals are serialized as "p/q" strings and complex numbers as [re, im].
"""

from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field

Rational = str
ComplexPair = list[float]


class CamelModel(BaseModel):
    """Base model accepting both field names and camelCase aliases."""

    model_config = ConfigDict(populate_by_name=True)


class ErrorDetail(BaseModel):
    """Error detail information."""

    code: str = Field(..., description="Error code")
    message: str = Field(..., description="Error message")
    details: Optional[dict[str, Any]] = Field(default=None, description="Additional error details")


class ErrorResponse(BaseModel):
    """Error response wrapper."""

    success: bool = Field(default=False, description="Command success status")
    error: ErrorDetail = Field(..., description="Error information")
