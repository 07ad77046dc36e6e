"""
Unit tests for BaseService.
"""

import pytest

from orbitlab.core.exceptions import NotNonClosedError
from orbitlab.services.base import BaseService


class TestBaseService:
    """Tests for BaseService."""

    def test_measure_time_success(self):
        """Test measure_time returns result and timing."""
        def dummy_func(x):
            return x * 2

        result, timing = BaseService.measure_time(dummy_func, 5)

        assert result == 10
        assert timing >= 0
        assert timing < 1000  # Should be very fast

    def test_measure_time_keyword_arguments(self):
        """Test measure_time forwards keyword arguments."""
        result, _ = BaseService.measure_time(lambda a, b=0: a - b, 5, b=2)
        assert result == 3

    def test_measure_time_exception(self):
        """Test measure_time propagates library exceptions unchanged."""
        def failing_func():
            raise NotNonClosedError()

        with pytest.raises(NotNonClosedError, match="the orbit is closed"):
            BaseService.measure_time(failing_func)

    def test_safe_execute_success(self):
        """Test safe_execute returns result on success."""
        result = BaseService.safe_execute(lambda x: x + 1, 5)
        assert result == 6

    def test_safe_execute_failure_returns_default(self):
        """Test safe_execute returns default on error."""
        result = BaseService.safe_execute(
            lambda: (_ for _ in ()).throw(ValueError("error")),
            default="default_value"
        )
        assert result == "default_value"

    def test_safe_execute_default_is_none(self):
        """Test safe_execute returns None when no default is given."""
        def failing_func():
            raise ValueError("error")

        assert BaseService.safe_execute(failing_func) is None
