"""
Custom exceptions for orbitlab.
"""

from typing import Any


class OrbitLabException(Exception):
    """Base exception for all orbitlab errors."""

    def __init__(
        self,
        message: str,
        code: str = "ORBITLAB_ERROR",
        details: dict[str, Any] | None = None
    ):
        self.message = message
        self.code = code
        self.details = details
        super().__init__(self.message)


class ValidationError(OrbitLabException):
    """Exception raised when an input fails validation."""

    def __init__(self, message: str):
        super().__init__(message, code="VALIDATION_ERROR")


class NotARootError(OrbitLabException):
    """Exception raised when a vector is required to be a root and is not."""

    def __init__(self, vector: Any, where: str = "the root system"):
        super().__init__(f"{vector} is not a root of {where}", code="NOT_A_ROOT")


class InvalidPositiveSystemError(OrbitLabException):
    """Exception raised when a set of roots is not a positive system."""

    def __init__(self, message: str):
        super().__init__(message, code="INVALID_POSITIVE_SYSTEM")


class EnumerationCapError(OrbitLabException):
    """Exception raised when a group enumeration exceeds its cap."""

    def __init__(self, cap: int):
        super().__init__(
            f"Enumeration exceeded the cap of {cap} elements",
            code="ENUMERATION_CAP",
            details={"cap": cap}
        )


class NotNonClosedError(OrbitLabException):
    """Exception raised when a descriptor describes a closed double coset."""

    def __init__(self, message: str = "Every gamma lies in w Delta_Theta; the orbit is closed"):
        super().__init__(message, code="NOT_NON_CLOSED")


class BetaSystemError(OrbitLabException):
    """Exception raised when a beta-system or Delta split cannot be built."""

    def __init__(self, message: str):
        super().__init__(message, code="BETA_SYSTEM_ERROR")


class CertificateFailure(OrbitLabException):
    """Exception raised when a separation certificate does not hold."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(message, code="CERTIFICATE_FAILURE", details=details)


class DegenerateError(OrbitLabException):
    """Exception raised when a numerical decision falls inside the ambiguity band."""

    def __init__(self, message: str, quantities: dict[str, Any] | None = None):
        super().__init__(message, code="DEGENERATE", details=quantities)


class WitnessNotFoundError(OrbitLabException):
    """Exception raised when the witness search exhausts its budget."""

    def __init__(self, claim: str, best_violation: float):
        super().__init__(
            f"No witness found for claim {claim} (best violation {best_violation:.3e})",
            code="WITNESS_NOT_FOUND",
            details={"claim": claim, "best_violation": best_violation}
        )


class VerificationError(OrbitLabException):
    """Exception raised when a reproduced table or diagram does not match."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(message, code="VERIFICATION_FAILED", details=details)
