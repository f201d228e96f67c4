"""
Shared constants and oracle values for the diracbell tests.
"""

import math

import numpy as np

PROPERTY_SEED = 20240607

SQRT2 = math.sqrt(2.0)
TSIRELSON = 2.0 * SQRT2

X_HAT = np.array([1.0, 0.0, 0.0])
Y_HAT = np.array([0.0, 1.0, 0.0])
Z_HAT = np.array([0.0, 0.0, 1.0])

BETA_GRID = (0.0, 0.1, 0.3, 0.5, 0.6, 0.8, 0.9, 0.99, 0.995, 0.999)

# Czachor correlator for a = (x+z)/sqrt2, b = x, u = 0.6 z
CZACHOR_EXAMPLE = -0.62469504755442418

# In-plane maximum of the rigid CHSH geometry at beta = 0.9, from a 1 degree scan
CZACHOR_PLANE_ORACLE_09 = 2.6325562161047418

# Rigid in-plane Czachor maxima 2(1 + sqrt(1 - b^2)) / sqrt(2 - b^2)
CZACHOR_PLANE_MAXIMA = {
    0.0: 2.828427124746,
    0.11: 2.828414025639,
    0.22: 2.828209630585,
    0.33: 2.827253491568,
    0.44: 2.824351413530,
    0.55: 2.817086226459,
    0.66: 2.800322879108,
    0.77: 2.761805226340,
    0.88: 2.664648272168,
    0.99: 2.259760860653,
}

CHSH_SCAN_HEADER = "beta,operator,restriction,chsh_max,converged,iterations"
COMPARE_HEADER = "beta,E_pauli_lubanski,E_czachor,delta"


def assert_close(actual, expected, atol, what="value"):
    """Assert two arrays or scalars agree entrywise within ``atol``."""
    diff = float(np.max(np.abs(np.asarray(actual) - np.asarray(expected))))
    assert diff <= atol, f"{what} differs by {diff:.3e} (tolerance {atol:.0e})"
