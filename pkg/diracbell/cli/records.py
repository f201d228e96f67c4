"""
Run configuration and result records of the command-line front end.

``build_run_config`` turns parsed arguments into a validated ``RunConfig``;
every failure surfaces as a ``ConfigError`` naming the offending flag.
"""
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from typing import Iterable, List, Literal, Mapping, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from diracbell.analysis.bell import MeasurementSettings, OperatorKind, PlaneRestriction
from diracbell.analysis.optimizer import OptimizerConfig, default_optimizer_config
from diracbell.core.constants import (
    BETA_MAX,
    CANONICAL_ANGLES_DEG,
    DEFAULT_BETA_GRID,
    DEFAULT_MASS,
    DEFAULT_PLANE,
    RECORD_COLUMNS,
)
from diracbell.core.utils import (
    atomic_write_text,
    format_float,
    normalize,
    parse_beta_grid,
    parse_vector,
    planar_vector,
    plane_axes,
)

logger = logging.getLogger(__name__)

Direction = Tuple[float, float, float]

FIELD_FLAGS = {
    "mass": "--mass",
    "betas": "--beta",
    "boost_dir": "--boost-dir",
    "a": "--a",
    "a_prime": "--a-prime",
    "b": "--b",
    "b_prime": "--b-prime",
    "operators": "--operator",
    "restriction": "--restrict-plane",
    "out": "--out",
    "format": "--format",
    "seed": "--seed",
    "tol": "--tol",
    "multistart": "DIRACBELL_MULTISTART",
    "refine": "DIRACBELL_REFINE",
    "max_iter": "DIRACBELL_MAX_ITER",
    "workers": "--workers",
}

_SETTING_FLAGS = (("a", "--a"), ("a_prime", "--a-prime"), ("b", "--b"), ("b_prime", "--b-prime"))


class ConfigError(ValueError):
    """Raised when a command-line value is malformed or out of range."""

    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    command: Literal["correlator", "chsh-scan", "compare"]
    mass: float = Field(default=DEFAULT_MASS, gt=0.0, allow_inf_nan=False)
    betas: List[float] = Field(min_length=1)
    boost_dir: Direction = (0.0, 0.0, 1.0)
    a: Direction
    a_prime: Direction
    b: Direction
    b_prime: Direction
    operators: Tuple[OperatorKind, ...] = Field(min_length=1)
    restriction: PlaneRestriction = PlaneRestriction.NONE
    out: Optional[str] = None
    format: Literal["csv", "json"] = "csv"
    optimizer: OptimizerConfig = Field(default_factory=OptimizerConfig)

    @field_validator("betas")
    @classmethod
    def _betas_in_range(cls, betas):
        for beta in betas:
            if not 0.0 <= beta <= BETA_MAX:
                raise ValueError(f"beta must lie in [0, {BETA_MAX}], got {beta}")
        return betas

    @field_validator("boost_dir", "a", "a_prime", "b", "b_prime")
    @classmethod
    def _unit(cls, vector):
        return tuple(float(c) for c in normalize(vector))

    @property
    def settings(self) -> MeasurementSettings:
        return MeasurementSettings(self.a, self.a_prime, self.b, self.b_prime)


@dataclass(frozen=True)
class ResultRecord:
    beta: float
    boost_dir: Direction
    operator: OperatorKind
    settings: MeasurementSettings
    correlators: Tuple[float, float, float, float]
    chsh: float
    converged: bool = True

    def as_row(self) -> dict:
        values = [
            self.beta,
            *self.boost_dir,
            self.operator.value,
            *self.settings.flat(),
            *self.correlators,
            self.chsh,
            self.converged,
        ]
        return dict(zip(RECORD_COLUMNS, values))


def _flag_for(error: ValidationError) -> str:
    loc = error.errors()[0]["loc"]
    return FIELD_FLAGS.get(str(loc[0]), str(loc[0])) if loc else "config"


def _one_line(error: ValidationError) -> str:
    first = error.errors()[0]
    return first["msg"].replace("\n", " ")


def _direction(text: Optional[str], flag: str, axes, default_angle: float) -> Direction:
    if text is None:
        return tuple(float(c) for c in planar_vector(default_angle, *axes))
    try:
        if "," not in text:
            return tuple(float(c) for c in normalize(planar_vector(float(text), *axes)))
        return parse_vector(text)
    except ValueError as e:
        raise ConfigError(flag, str(e)) from e


def _checked(betas: List[float], flag: str) -> List[float]:
    for beta in betas:
        if not 0.0 <= beta <= BETA_MAX:
            raise ConfigError(flag, f"beta must lie in [0, {BETA_MAX}], got {beta}")
    return betas


def _betas(args) -> List[float]:
    beta = getattr(args, "beta", None)
    grid = getattr(args, "beta_grid", None)
    if beta is not None and grid is not None:
        raise ConfigError("--beta", "cannot be combined with --beta-grid")
    if args.command == "correlator":
        if grid is not None:
            raise ConfigError("--beta-grid", "correlator takes a single --beta")
        return _checked([0.0 if beta is None else beta], "--beta")
    if beta is not None:
        return _checked([beta], "--beta")
    try:
        betas = parse_beta_grid(grid or DEFAULT_BETA_GRID)
    except ValueError as e:
        raise ConfigError("--beta-grid", str(e)) from e
    return _checked(betas, "--beta-grid")


def _operators(args) -> Tuple[OperatorKind, ...]:
    choice = args.operator or ("pauli-lubanski" if args.command == "correlator" else "both")
    if choice == "both":
        return (OperatorKind.PAULI_LUBANSKI, OperatorKind.CZACHOR)
    return (OperatorKind(choice),)


def build_run_config(args) -> RunConfig:
    """
    Validate parsed command-line arguments.

    Directions are normalized; a bare number is a planar angle in degrees
    within ``--plane``. Unset settings default to the canonical CHSH angles
    in that plane.

    :param args: argparse namespace of a correlator, chsh-scan or compare run
    :return: frozen RunConfig
    :raises ConfigError: On the first malformed or out-of-range value
    """
    try:
        axes = plane_axes(args.plane or DEFAULT_PLANE)
    except ValueError as e:
        raise ConfigError("--plane", str(e)) from e

    directions = {
        field: _direction(getattr(args, field), flag, axes, angle)
        for (field, flag), angle in zip(_SETTING_FLAGS, CANONICAL_ANGLES_DEG)
    }
    try:
        boost_dir = parse_vector(args.boost_dir)
    except ValueError as e:
        raise ConfigError("--boost-dir", str(e)) from e

    try:
        optimizer = default_optimizer_config(
            seed=args.seed, tol=args.tol, workers=args.workers
        )
    except ValidationError as e:
        raise ConfigError(_flag_for(e), _one_line(e)) from e
    except ValueError as e:
        raise ConfigError("environment", str(e)) from e

    try:
        config = RunConfig(
            command=args.command,
            mass=args.mass,
            betas=_betas(args),
            boost_dir=boost_dir,
            operators=_operators(args),
            restriction=(
                PlaneRestriction.BOOST_PLANE
                if args.restrict_plane
                else PlaneRestriction.NONE
            ),
            out=args.out,
            format=args.format,
            optimizer=optimizer,
            **directions,
        )
    except ValidationError as e:
        raise ConfigError(_flag_for(e), _one_line(e)) from e
    logger.debug("Run configuration: %s", config)
    return config


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def render_csv(columns: Sequence[str], rows: Iterable[Mapping]) -> str:
    """CSV text with a header line and ``\\n`` line endings."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row[column]) for column in columns])
    return buffer.getvalue()


def render_json(rows: Iterable[Mapping]) -> str:
    return json.dumps([dict(row) for row in rows], indent=2) + "\n"


def render(columns: Sequence[str], rows: Sequence[Mapping], fmt: str) -> str:
    if fmt == "json":
        return render_json(rows)
    return render_csv(columns, rows)


def emit(content: str, out: Optional[str]) -> None:
    """
    Send rendered output to ``out`` or stdout.

    :raises ConfigError: If ``out`` cannot be written; no partial file remains
    """
    if out:
        try:
            atomic_write_text(out, content)
        except OSError as e:
            raise ConfigError("--out", e.strerror or str(e)) from e
    else:
        sys.stdout.write(content)
        sys.stdout.flush()
