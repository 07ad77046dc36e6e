"""
Core module for orbitlab.
"""

from orbitlab.core.config import Settings, get_settings, reload_settings
from orbitlab.core.logging import logger, setup_logging, get_logger
from orbitlab.core.exceptions import (
    OrbitLabException,
    ValidationError,
    NotARootError,
    InvalidPositiveSystemError,
    EnumerationCapError,
    NotNonClosedError,
    BetaSystemError,
    CertificateFailure,
    DegenerateError,
    WitnessNotFoundError,
    VerificationError,
)

__all__ = [
    "Settings",
    "get_settings",
    "reload_settings",
    "logger",
    "setup_logging",
    "get_logger",
    "OrbitLabException",
    "ValidationError",
    "NotARootError",
    "InvalidPositiveSystemError",
    "EnumerationCapError",
    "NotNonClosedError",
    "BetaSystemError",
    "CertificateFailure",
    "DegenerateError",
    "WitnessNotFoundError",
    "VerificationError",
]
