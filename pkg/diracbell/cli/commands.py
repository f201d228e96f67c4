import json
import logging
import sys
from typing import List

from diracbell.analysis.bell import chsh_from_table, correlation_table, correlator
from diracbell.analysis.optimizer import chsh_boost_sweep
from diracbell.analysis.verification import run_checks
from diracbell.core.constants import (
    CHSH_SCAN_COLUMNS,
    COMPARE_COLUMNS,
    EXIT_OK,
    EXIT_USAGE_ERROR,
    EXIT_VERIFY_FAILED,
    RECORD_COLUMNS,
)
from diracbell.core.utils import format_float
from diracbell.cli.records import ResultRecord, RunConfig, emit, render
from diracbell.physics.minkowski import BoostParams
from diracbell.physics.observables import czachor_correlator

logger = logging.getLogger(__name__)


def run_verify(as_json: bool = False) -> int:
    """
    Run the invariant suite and print one line per group.

    :param as_json: print a JSON report instead of text lines
    :return: 0 if every group passes, 1 on any failure, 2 on internal error
    """
    try:
        results = run_checks()
    except Exception as e:
        logger.exception("Verification suite crashed: %s", e)
        return EXIT_USAGE_ERROR

    passed = all(result.passed for result in results)
    if as_json:
        report = {"passed": passed, "checks": [r.as_dict() for r in results]}
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status} {r.name} residual={r.residual:.3e} tol={r.tolerance:.0e}"
            if r.detail:
                line += f" ({r.detail})"
            sys.stdout.write(line + "\n")
    sys.stdout.flush()

    if not passed:
        failed = [r.name for r in results if not r.passed]
        logger.error("Verification failed: %s", ", ".join(failed))
        return EXIT_VERIFY_FAILED
    logger.info("All %d verification groups passed", len(results))
    return EXIT_OK


def _boost(cfg: RunConfig, beta: float) -> BoostParams:
    return BoostParams(speed=beta, direction=cfg.boost_dir, mass=cfg.mass)


def run_correlator(cfg: RunConfig) -> List[ResultRecord]:
    """
    Four correlators and the CHSH value at the configured settings.

    :param cfg: configuration with a single beta
    :return: one record per requested operator kind
    """
    beta = cfg.betas[0]
    boost = _boost(cfg, beta)
    settings = cfg.settings
    records = []
    for kind in cfg.operators:
        table = correlation_table(settings, boost, kind)
        records.append(
            ResultRecord(
                beta=beta,
                boost_dir=cfg.boost_dir,
                operator=kind,
                settings=settings,
                correlators=table,
                chsh=chsh_from_table(table),
            )
        )
    return records


def run_chsh_scan(cfg: RunConfig) -> List[dict]:
    """
    Maximized CHSH values over the beta grid.

    Rows are ordered by beta, then by operator in the order requested.
    """
    sweeps = {
        kind: chsh_boost_sweep(
            kind,
            cfg.betas,
            restriction=cfg.restriction,
            config=cfg.optimizer,
            direction=cfg.boost_dir,
            mass=cfg.mass,
        )
        for kind in cfg.operators
    }
    rows = []
    for index, beta in enumerate(cfg.betas):
        for kind in cfg.operators:
            result = sweeps[kind][index]
            rows.append(
                {
                    "beta": beta,
                    "operator": kind.value,
                    "restriction": cfg.restriction.value,
                    "chsh_max": result.value,
                    "converged": result.converged,
                    "iterations": result.iterations,
                }
            )
    return rows


def run_compare(cfg: RunConfig) -> List[dict]:
    """E(a,b) under both observables across the beta grid; delta = czachor − pauli-lubanski."""
    rows = []
    for beta in cfg.betas:
        boost = _boost(cfg, beta)
        e_pl = correlator(cfg.a, cfg.b, boost)
        e_cz = czachor_correlator(cfg.a, cfg.b, boost.velocity)
        logger.debug("beta=%s E_pl=%s E_cz=%s", format_float(beta), e_pl, e_cz)
        rows.append(
            {
                "beta": beta,
                "E_pauli_lubanski": e_pl,
                "E_czachor": e_cz,
                "delta": e_cz - e_pl,
            }
        )
    return rows


def execute(cfg: RunConfig) -> str:
    """
    Run a data-producing command and write its output.

    :param cfg: validated run configuration
    :return: the rendered output
    :raises ConfigError: If the output file cannot be written
    """
    if cfg.command == "correlator":
        columns = RECORD_COLUMNS
        rows = [record.as_row() for record in run_correlator(cfg)]
    elif cfg.command == "chsh-scan":
        columns = CHSH_SCAN_COLUMNS
        rows = run_chsh_scan(cfg)
    else:
        columns = COMPARE_COLUMNS
        rows = run_compare(cfg)

    content = render(columns, rows, cfg.format)
    emit(content, cfg.out)
    logger.info("%s produced %d rows", cfg.command, len(rows))
    return content

