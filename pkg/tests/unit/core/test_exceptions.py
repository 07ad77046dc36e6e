"""
Unit tests for orbitlab exceptions and their exit codes.
"""

import pytest

from orbitlab.cli.deps import EXIT_FAILURE, EXIT_USAGE, exit_code_for
from orbitlab.core.exceptions import (
    BetaSystemError,
    CertificateFailure,
    DegenerateError,
    EnumerationCapError,
    InvalidPositiveSystemError,
    NotARootError,
    NotNonClosedError,
    OrbitLabException,
    ValidationError,
    VerificationError,
    WitnessNotFoundError,
)
from orbitlab.wrappers import wrap_error


class TestExceptionCodes:
    """Tests for error codes carried by each exception."""

    @pytest.mark.parametrize("exc, code", [
        (ValidationError("bad"), "VALIDATION_ERROR"),
        (NotARootError("3e1", "C2"), "NOT_A_ROOT"),
        (InvalidPositiveSystemError("bad"), "INVALID_POSITIVE_SYSTEM"),
        (EnumerationCapError(10), "ENUMERATION_CAP"),
        (NotNonClosedError(), "NOT_NON_CLOSED"),
        (BetaSystemError("bad"), "BETA_SYSTEM_ERROR"),
        (CertificateFailure("bad"), "CERTIFICATE_FAILURE"),
        (DegenerateError("bad"), "DEGENERATE"),
        (WitnessNotFoundError("3.3", 0.5), "WITNESS_NOT_FOUND"),
        (VerificationError("bad"), "VERIFICATION_FAILED"),
    ])
    def test_code(self, exc, code):
        """Test each exception reports its code and is an OrbitLabException."""
        assert isinstance(exc, OrbitLabException)
        assert exc.code == code

    def test_not_a_root_message(self):
        """Test NotARootError names the vector and the root system."""
        exc = NotARootError("3e1", "C2")
        assert exc.message == "3e1 is not a root of C2"

    def test_witness_not_found_details(self):
        """Test WitnessNotFoundError keeps the best violation."""
        exc = WitnessNotFoundError("3.3", 0.25)
        assert exc.details == {"claim": "3.3", "best_violation": 0.25}
        assert "3.3" in exc.message


class TestExitCodes:
    """Tests for the mapping of error codes to exit codes."""

    @pytest.mark.parametrize("exc", [
        ValidationError("bad"),
        NotARootError("3e1"),
        InvalidPositiveSystemError("bad"),
    ])
    def test_usage_errors(self, exc):
        """Test input errors map to exit code 2."""
        assert exit_code_for(exc) == EXIT_USAGE

    @pytest.mark.parametrize("exc", [
        CertificateFailure("bad"),
        DegenerateError("bad"),
        WitnessNotFoundError("3.1", 1.0),
        VerificationError("bad"),
        NotNonClosedError(),
    ])
    def test_failures(self, exc):
        """Test verification and numerical errors map to exit code 1."""
        assert exit_code_for(exc) == EXIT_FAILURE

    def test_wrap_error(self):
        """Test error reports carry code, message and details."""
        response = wrap_error(DegenerateError("Ambiguous", {"q": 1e-6}))
        assert response.success is False
        assert response.error.code == "DEGENERATE"
        assert response.error.message == "Ambiguous"
        assert response.error.details == {"q": 1e-6}
