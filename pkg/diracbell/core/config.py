import os
import logging.config
from dotenv import load_dotenv

from diracbell.core.constants import (
    OPTIMIZER_SEED_DEFAULT,
    OPTIMIZER_TOL_DEFAULT,
    OPTIMIZER_MULTISTART_DEFAULT,
    OPTIMIZER_REFINE_DEFAULT,
    OPTIMIZER_MAX_ITER_DEFAULT,
    SWEEP_WORKERS_DEFAULT,
)


load_dotenv()  # Load environment variables

LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()


def _env_number(name, default, cast):
    """
    Read a numeric environment variable.

    :param name: environment variable name
    :param default: value used when the variable is unset or empty
    :param cast: int or float
    :return: parsed value
    :raises ValueError: If the variable is set but not parseable
    """
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return cast(raw)
    except ValueError as e:
        raise ValueError(f"Invalid {name} value {raw!r}: {e}") from e


def get_optimizer_config():
    """
    Get CHSH optimizer configuration from environment variables.

    Optional env vars:
        - DIRACBELL_SEED (default: 20240101)
        - DIRACBELL_TOL (default: 1e-9)
        - DIRACBELL_MULTISTART (default: 16)
        - DIRACBELL_REFINE (default: 4)
        - DIRACBELL_MAX_ITER (default: 4000)
        - DIRACBELL_WORKERS (default: 1)

    :return: dict with seed, tol, multistart, refine, max_iter and workers
    :raises ValueError: If a variable is set to a non-numeric value
    """
    return {
        "seed": _env_number("DIRACBELL_SEED", OPTIMIZER_SEED_DEFAULT, int),
        "tol": _env_number("DIRACBELL_TOL", OPTIMIZER_TOL_DEFAULT, float),
        "multistart": _env_number(
            "DIRACBELL_MULTISTART", OPTIMIZER_MULTISTART_DEFAULT, int
        ),
        "refine": _env_number("DIRACBELL_REFINE", OPTIMIZER_REFINE_DEFAULT, int),
        "max_iter": _env_number("DIRACBELL_MAX_ITER", OPTIMIZER_MAX_ITER_DEFAULT, int),
        "workers": _env_number("DIRACBELL_WORKERS", SWEEP_WORKERS_DEFAULT, int),
    }


def configure_logging(log_level):
    """
    Configure application logging.

    Records go to stderr so that CSV/JSON written to stdout stays clean.

    param log_level: log level for logging
    return: None
    """
    log_msg_fmt = (
        "%(asctime)s [%(name)s:%(filename)s:%(lineno)d] %(levelname)s: %(message)s"
    )
    log_config_dict = {
        "version": 1,
        "disable_existing_loggers": False,
        "loggers": {
            "root": {
                "level": log_level,
                "handlers": ["console"],
            },
            "diracbell": {
                "level": log_level,
                "handlers": ["console"],
                "propagate": False,
            },
        },
        "handlers": {
            "console": {
                "class": "logging.StreamHandler",
                "formatter": "standard",
                "stream": "ext://sys.stderr",
            },
        },
        "formatters": {
            "standard": {"format": log_msg_fmt},
        },
    }

    logging.config.dictConfig(log_config_dict)
