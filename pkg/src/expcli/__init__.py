"""Experiment harness: validation campaigns emitted as CSV."""
from .spec import EXPERIMENTS, ExperimentSpec, load_experiment_spec
from .campaigns import (
    fixture_node,
    iter_multi_req,
    iter_single_req,
    random_proximity,
    request_grades,
    run_multi_req,
    run_salt_sweep,
    run_single_req,
    salt_sweep_row,
)
from .tas_example import TasExampleReport, run_tas_example
from .output import write_csv
from .runner import EXIT_ACCEPTANCE_FAILED, EXIT_OK, run_experiment

__all__ = [
    'EXPERIMENTS', 'ExperimentSpec', 'load_experiment_spec',
    'fixture_node', 'iter_multi_req', 'iter_single_req', 'random_proximity', 'request_grades',
    'run_multi_req', 'run_salt_sweep', 'run_single_req', 'salt_sweep_row',
    'TasExampleReport', 'run_tas_example', 'write_csv',
    'EXIT_ACCEPTANCE_FAILED', 'EXIT_OK', 'run_experiment',
]
