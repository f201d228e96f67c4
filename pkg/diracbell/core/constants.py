import math

# Kinematics (natural units, c = hbar = 1)
BETA_MAX = 0.999999
DEFAULT_MASS = 1.0
UNIT_NORM_TOLERANCE = 1e-12

TSIRELSON_BOUND = 2.0 * math.sqrt(2.0)
LOCAL_REALISM_BOUND = 2.0

# Optimizer defaults
OPTIMIZER_SEED_DEFAULT = 20240101
OPTIMIZER_TOL_DEFAULT = 1e-9
OPTIMIZER_MULTISTART_DEFAULT = 16
OPTIMIZER_MULTISTART_MIN = 16
OPTIMIZER_REFINE_DEFAULT = 4
OPTIMIZER_MAX_ITER_DEFAULT = 4000
OPTIMIZER_XATOL = 1e-8
SWEEP_WORKERS_DEFAULT = 1

# Canonical planar CHSH angles in degrees: a, a', b, b'
CANONICAL_ANGLES_DEG = (0.0, 90.0, 45.0, -45.0)

# Output
CHSH_SCAN_COLUMNS = ("beta", "operator", "restriction", "chsh_max", "converged", "iterations")
COMPARE_COLUMNS = ("beta", "E_pauli_lubanski", "E_czachor", "delta")
BETA_GRID_DECIMALS = 12

# Exit codes
EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE_ERROR = 2

# One ResultRecord per (beta, operator) from the correlator command
RECORD_COLUMNS = (
    "beta",
    "boost_dir_x",
    "boost_dir_y",
    "boost_dir_z",
    "operator",
    *(f"{name}_{axis}" for name in ("a", "a_prime", "b", "b_prime") for axis in "xyz"),
    "E_ab",
    "E_a_prime_b",
    "E_a_b_prime",
    "E_a_prime_b_prime",
    "chsh",
    "converged",
)

# CLI defaults
DEFAULT_PLANE = "xz"
DEFAULT_BOOST_DIR = "0,0,1"
DEFAULT_BETA_GRID = "0:0.99:0.11"
