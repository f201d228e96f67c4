"""
Tests for config module.

Tests optimizer configuration parsing from environment variables and logging setup.
"""

import logging
import os
import pytest
from unittest.mock import patch

from diracbell.core.config import configure_logging, get_optimizer_config


class TestGetOptimizerConfig:
    """Test get_optimizer_config function."""

    def test_defaults_when_unset(self):
        """Test that unset variables fall back to the constants."""
        with patch.dict(os.environ, {}, clear=True):
            result = get_optimizer_config()

            assert result == {
                "seed": 20240101,
                "tol": 1e-9,
                "multistart": 16,
                "refine": 4,
                "max_iter": 4000,
                "workers": 1,
            }

    def test_parse_all_values(self):
        """Test parsing every DIRACBELL_* variable."""
        env = {
            "DIRACBELL_SEED": "42",
            "DIRACBELL_TOL": "1e-7",
            "DIRACBELL_MULTISTART": "32",
            "DIRACBELL_REFINE": "8",
            "DIRACBELL_MAX_ITER": "100",
            "DIRACBELL_WORKERS": "4",
        }

        with patch.dict(os.environ, env, clear=True):
            result = get_optimizer_config()

            assert result["seed"] == 42
            assert result["tol"] == 1e-7
            assert result["multistart"] == 32
            assert result["refine"] == 8
            assert result["max_iter"] == 100
            assert result["workers"] == 4

    def test_empty_value_uses_default(self):
        """Test that an empty variable behaves like an unset one."""
        with patch.dict(os.environ, {"DIRACBELL_SEED": "  "}, clear=True):
            assert get_optimizer_config()["seed"] == 20240101

    def test_invalid_integer_raises_error(self):
        """Test that a non-numeric seed raises ValueError naming the variable."""
        with patch.dict(os.environ, {"DIRACBELL_SEED": "abc"}, clear=True):
            with pytest.raises(ValueError, match="Invalid DIRACBELL_SEED value"):
                get_optimizer_config()

    def test_float_for_integer_raises_error(self):
        """Test that a fractional multistart count is rejected."""
        with patch.dict(os.environ, {"DIRACBELL_MULTISTART": "16.5"}, clear=True):
            with pytest.raises(ValueError, match="Invalid DIRACBELL_MULTISTART value"):
                get_optimizer_config()

    def test_invalid_tolerance_raises_error(self):
        """Test that a non-numeric tolerance raises ValueError."""
        with patch.dict(os.environ, {"DIRACBELL_TOL": "tight"}, clear=True):
            with pytest.raises(ValueError, match="Invalid DIRACBELL_TOL value"):
                get_optimizer_config()


class TestConfigureLogging:
    """Test configure_logging function."""

    def test_sets_package_logger_level(self):
        """Test that the diracbell logger gets the requested level and stays local."""
        configure_logging("DEBUG")
        logger = logging.getLogger("diracbell")

        assert logger.level == logging.DEBUG
        assert logger.propagate is False
        assert len(logger.handlers) == 1

        configure_logging("INFO")
        assert logger.level == logging.INFO
