import logging
import math
import os
import tempfile
from typing import Sequence, Tuple

import numpy as np

from diracbell.core.constants import BETA_GRID_DECIMALS, UNIT_NORM_TOLERANCE

logger = logging.getLogger(__name__)

_AXES = {"x": (1.0, 0.0, 0.0), "y": (0.0, 1.0, 0.0), "z": (0.0, 0.0, 1.0)}


def normalize(vector: Sequence[float]) -> np.ndarray:
    """
    Return the unit vector along ``vector``.

    :param vector: three finite reals, not all zero
    :return: float array of norm 1
    :raises ValueError: If the vector is zero or has non-finite entries
    """
    arr = np.asarray(vector, dtype=float)
    if arr.shape != (3,):
        raise ValueError(f"expected 3 components, got {arr.size}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("components must be finite")
    norm = float(np.linalg.norm(arr))
    if norm == 0.0:
        raise ValueError("zero vector has no direction")
    return arr / norm


def is_unit(vector: Sequence[float], tol: float = UNIT_NORM_TOLERANCE) -> bool:
    """Check |v| = 1 within ``tol``."""
    return abs(float(np.linalg.norm(vector)) - 1.0) <= tol


def parse_vector(text: str) -> Tuple[float, float, float]:
    """
    Parse ``"x,y,z"`` into a normalized direction.

    :param text: comma separated reals
    :return: unit three-tuple
    :raises ValueError: If the text is not three reals or is the zero vector
    """
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise ValueError(f"expected 'x,y,z', got {text!r}")
    try:
        values = [float(p) for p in parts]
    except ValueError as e:
        raise ValueError(f"non-numeric component in {text!r}") from e
    return tuple(float(c) for c in normalize(values))


def plane_axes(plane: str) -> Tuple[np.ndarray, np.ndarray]:
    """
    Resolve a plane name such as ``"xz"`` into its two axes.

    The planar angle is measured from the first axis towards the second.
    """
    plane = plane.lower()
    if len(plane) != 2 or plane[0] == plane[1] or any(c not in _AXES for c in plane):
        raise ValueError(f"plane must be two distinct axes out of x, y, z, got {plane!r}")
    return np.array(_AXES[plane[0]]), np.array(_AXES[plane[1]])


def planar_vector(angle_deg: float, e1: np.ndarray, e2: np.ndarray) -> np.ndarray:
    """Unit vector cos(angle)·e1 + sin(angle)·e2."""
    theta = math.radians(angle_deg)
    return math.cos(theta) * np.asarray(e1, dtype=float) + math.sin(theta) * np.asarray(
        e2, dtype=float
    )


def parse_beta_grid(text: str) -> list:
    """
    Parse a ``start:stop:step`` grid; ``stop`` is included when it lies on the grid.

    A bare number yields a single-point grid.

    :param text: grid text, e.g. ``"0:0.99:0.11"``
    :return: list of β values in increasing order
    :raises ValueError: If the text is malformed or step <= 0
    """
    parts = text.split(":")
    try:
        numbers = [float(p) for p in parts]
    except ValueError as e:
        raise ValueError(f"expected 'start:stop:step', got {text!r}") from e
    if len(numbers) == 1:
        return [numbers[0]]
    if len(numbers) != 3:
        raise ValueError(f"expected 'start:stop:step', got {text!r}")
    start, stop, step = numbers
    if step <= 0:
        raise ValueError(f"step must be positive, got {step}")
    if stop < start:
        raise ValueError(f"stop {stop} is below start {start}")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + i * step, BETA_GRID_DECIMALS) for i in range(count)]


def format_float(value: float) -> str:
    """Shortest round-trip text for a float (locale independent)."""
    return repr(float(value))


def atomic_write_text(path: str, content: str) -> None:
    """
    Write ``content`` to ``path`` through a temp file in the same directory.

    The target is replaced only after the write completed, so failures leave
    no partial file behind.

    :param path: destination file
    :param content: text to write
    :raises OSError: If the directory is not writable
    """
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".diracbell-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            f.write(content)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise
    logger.info("Wrote %d bytes to %s", len(content), path)
