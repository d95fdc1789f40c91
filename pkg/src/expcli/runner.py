"""Dispatch of an experiment spec to its campaign."""
from typing import Optional

from src.core.config import EngineConfig
from src.core.logger import setup_logger

from .campaigns import iter_multi_req, iter_single_req, run_salt_sweep
from .output import write_csv
from .spec import MULTI_REQ, SALT_SWEEP, SINGLE_REQ, ExperimentSpec
from .tas_example import run_tas_example

logger = setup_logger(__name__)

EXIT_OK = 0
EXIT_ACCEPTANCE_FAILED = 2


def run_experiment(spec: ExperimentSpec, config: Optional[EngineConfig] = None,
                   out: Optional[str] = None) -> int:
    """Run one campaign and write its CSV.

    Args:
        spec: Experiment to run
        config: Engine configuration (defaults when None)
        out: CSV path; stdout when None

    Returns:
        int: Process exit code, 2 when the TAS example misses a check
    """
    logger.info(f"Starting experiment {spec.name} (runs={spec.runs}, seed={spec.seed})")
    if spec.name == SINGLE_REQ:
        rows = write_csv(iter_single_req(spec, config), out)
    elif spec.name == MULTI_REQ:
        rows = write_csv(iter_multi_req(spec, config), out)
    elif spec.name == SALT_SWEEP:
        rows = write_csv(run_salt_sweep(spec, config), out)
    else:
        report = run_tas_example(spec.schedule)
        rows = write_csv(report.to_frame(), out)
        if not report.passed:
            logger.error("TAS example deviates from its expected values")
            return EXIT_ACCEPTANCE_FAILED
    logger.info(f"Finished experiment {spec.name}: {rows} rows")
    return EXIT_OK
