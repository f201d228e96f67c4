"""
Tests for core utility helpers.
"""

import math
import os

import numpy as np
import pytest

from diracbell.core.utils import (
    atomic_write_text,
    format_float,
    is_unit,
    normalize,
    parse_beta_grid,
    parse_vector,
    planar_vector,
    plane_axes,
)
from tests.helpers import X_HAT, Z_HAT, assert_close


class TestVectors:
    """Test vector parsing and normalization."""

    def test_normalize(self):
        assert_close(normalize([0.0, 3.0, 4.0]), [0.0, 0.6, 0.8], 1e-16)

    @pytest.mark.parametrize(
        "vector, message",
        [
            ([0.0, 0.0, 0.0], "zero vector"),
            ([1.0, math.nan, 0.0], "finite"),
            ([1.0, 0.0], "3 components"),
        ],
    )
    def test_normalize_rejects(self, vector, message):
        with pytest.raises(ValueError, match=message):
            normalize(vector)

    def test_is_unit(self):
        assert is_unit(X_HAT)
        assert not is_unit([1.0, 1e-5, 0.0])

    def test_parse_vector(self):
        assert parse_vector(" 0, 0 ,2") == (0.0, 0.0, 1.0)

    @pytest.mark.parametrize("text", ["1,2", "1,2,x", "0,0,0", ""])
    def test_parse_vector_rejects(self, text):
        with pytest.raises(ValueError):
            parse_vector(text)


class TestPlanes:
    """Test plane names and planar angles."""

    def test_plane_axes(self):
        e1, e2 = plane_axes("XZ")
        assert_close(e1, X_HAT, 0.0)
        assert_close(e2, Z_HAT, 0.0)

    @pytest.mark.parametrize("plane", ["xx", "xw", "xyz", ""])
    def test_plane_axes_rejects(self, plane):
        with pytest.raises(ValueError, match="plane"):
            plane_axes(plane)

    def test_planar_vector(self):
        v = planar_vector(-45.0, X_HAT, Z_HAT)
        assert_close(v, [math.sqrt(0.5), 0.0, -math.sqrt(0.5)], 1e-15)


class TestBetaGrid:
    """Test start:stop:step grid parsing."""

    def test_inclusive_stop(self):
        assert parse_beta_grid("0:0.9:0.3") == [0.0, 0.3, 0.6, 0.9]

    def test_reference_grid(self):
        grid = parse_beta_grid("0:0.99:0.11")
        assert len(grid) == 10
        assert grid[-1] == 0.99
        assert grid[3] == 0.33

    def test_stop_off_grid(self):
        assert parse_beta_grid("0.1:0.5:0.3") == [0.1, 0.4]

    def test_single_value(self):
        assert parse_beta_grid("0.9") == [0.9]

    @pytest.mark.parametrize("text", ["0:1", "a:b:c", "0:0.5:0", "0.5:0.1:0.1", "0:1:-0.1"])
    def test_rejects(self, text):
        with pytest.raises(ValueError):
            parse_beta_grid(text)


class TestFormatting:
    """Test float formatting."""

    def test_shortest_round_trip(self):
        assert format_float(0.1) == "0.1"
        assert format_float(2.0 * math.sqrt(2.0)) == "2.8284271247461903"
        assert float(format_float(1 / 3)) == 1 / 3

    def test_numpy_scalar(self):
        assert format_float(np.float64(0.25)) == "0.25"


class TestAtomicWrite:
    """Test temp-file-and-rename output."""

    def test_writes_content(self, tmp_path):
        target = tmp_path / "out.csv"
        atomic_write_text(str(target), "a,b\n1,2\n")
        assert target.read_text() == "a,b\n1,2\n"
        assert os.listdir(tmp_path) == ["out.csv"]

    def test_replaces_existing_file(self, tmp_path):
        target = tmp_path / "out.csv"
        target.write_text("old")
        atomic_write_text(str(target), "new")
        assert target.read_text() == "new"

    def test_missing_directory_raises(self, tmp_path):
        with pytest.raises(OSError):
            atomic_write_text(str(tmp_path / "missing" / "out.csv"), "x")
        assert os.listdir(tmp_path) == []

    def test_failed_write_leaves_no_temp_file(self, tmp_path, monkeypatch):
        def fail(src, dst):
            raise OSError("disk full")

        monkeypatch.setattr(os, "replace", fail)
        with pytest.raises(OSError, match="disk full"):
            atomic_write_text(str(tmp_path / "out.csv"), "x")
        assert os.listdir(tmp_path) == []
