import argparse
import logging
import sys
from typing import Optional, Sequence

from diracbell.cli.commands import execute, run_verify
from diracbell.cli.records import ConfigError, build_run_config
from diracbell.core.config import LOG_LEVEL, configure_logging
from diracbell.core.constants import (
    DEFAULT_BOOST_DIR,
    DEFAULT_MASS,
    EXIT_OK,
    EXIT_USAGE_ERROR,
)

VALID_LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors are a single stderr line."""

    def error(self, message):
        self.exit(EXIT_USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _common_options() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument(
        "--log-level",
        type=str,
        choices=VALID_LOG_LEVELS,
        default=LOG_LEVEL,
        help="Logging level (e.g., DEBUG, INFO, WARNING, ERROR, CRITICAL)."
        " Can also be set via LOG_LEVEL env var",
    )
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    return common


def _run_options() -> argparse.ArgumentParser:
    run = _ArgumentParser(add_help=False)
    run.add_argument("--mass", type=float, default=DEFAULT_MASS, help="Particle mass m > 0.")
    run.add_argument("--beta", type=float, help="Single boost speed in [0, 0.999999].")
    run.add_argument(
        "--beta-grid",
        type=str,
        help="Boost speed grid 'start:stop:step'; stop is included when on the grid.",
    )
    run.add_argument("--boost-dir", type=str, default=DEFAULT_BOOST_DIR, help="x,y,z")
    for flag in ("--a", "--a-prime", "--b", "--b-prime"):
        run.add_argument(
            flag,
            type=str,
            help="Setting as x,y,z or as a planar angle in degrees within --plane"
            " (use --flag=-45 for negative values).",
        )
    run.add_argument("--plane", type=str, help="Plane of planar angles, e.g. xz (default).")
    run.add_argument(
        "--operator", choices=["pauli-lubanski", "czachor", "both"], default=None
    )
    run.add_argument(
        "--restrict-plane",
        action="store_true",
        help="Rotate the canonical CHSH geometry within the plane containing the boost.",
    )
    run.add_argument("--seed", type=int, help="Optimizer seed. Default DIRACBELL_SEED.")
    run.add_argument("--tol", type=float, help="CHSH convergence tolerance. Default DIRACBELL_TOL.")
    run.add_argument(
        "--workers", type=int, help="Worker processes for sweeps. Default DIRACBELL_WORKERS."
    )
    run.add_argument("--out", type=str, help="Output file; stdout when omitted.")
    return run


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="diracbell",
        description="diracbell - boost invariance of Bell correlations for Dirac particles",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_options()
    run = _run_options()

    verify = subparsers.add_parser(
        "verify", parents=[common], help="Run the invariant suite."
    )
    verify.add_argument("--json", action="store_true", help="Print a JSON report.")
    subparsers.add_parser(
        "correlator", parents=[common, run], help="Correlators and CHSH value at given settings."
    )
    subparsers.add_parser(
        "chsh-scan", parents=[common, run], help="Maximized CHSH value over a beta grid."
    )
    subparsers.add_parser(
        "compare", parents=[common, run], help="E(a,b) under both observables over a beta grid."
    )
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entrypoint for diracbell."""
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    logger = logging.getLogger(__name__)

    if args.command == "verify":
        return run_verify(as_json=args.json or args.format == "json")

    try:
        cfg = build_run_config(args)
        execute(cfg)
    except ConfigError as e:
        sys.stderr.write(f"diracbell: error: {e}\n")
        return EXIT_USAGE_ERROR
    except OSError as e:
        logger.debug("Run failed", exc_info=True)
        sys.stderr.write(f"diracbell: error: {e.strerror or e}\n")
        return EXIT_USAGE_ERROR
    except (ValueError, RuntimeError) as e:
        logger.debug("Run failed", exc_info=True)
        sys.stderr.write(f"diracbell: error: {e}\n")
        return EXIT_USAGE_ERROR
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
