"""Command-line interface: assess, simulate and experiment subcommands."""
import argparse
import dataclasses
import json
import sys
from typing import List, Optional

from src.core.config import APP_NAME, APP_VERSION, ConfigManager, EngineConfig
from src.core.errors import ConfigValidationError, NodeAssessError
from src.core.logger import set_log_level, setup_logger
from src.core.models import AdmissionRequest
from src.criteria.proximity import ProximitySample
from src.expcli import EXPERIMENTS, ExperimentSpec, load_experiment_spec, run_experiment
from src.history.log import HistoryLog
from src.managers.assessment_manager import AssessmentManager
from src.resources.node import load_node
from src.simnet import NegotiationSimulator, load_topology

logger = setup_logger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1


def build_parser() -> argparse.ArgumentParser:
    """Create the argument parser.

    The shared flags are accepted after any subcommand.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', metavar='PATH', help='engine configuration (YAML or JSON)')
    common.add_argument('--seed', type=int, metavar='N', help='master RNG seed')
    common.add_argument('--out', metavar='PATH', help='output file (stdout when omitted)')
    common.add_argument('--log-level', metavar='LEVEL', help='DEBUG, INFO, WARNING or ERROR')

    parser = argparse.ArgumentParser(
        prog=APP_NAME,
        description='Node self-assessment of admission requests.'
    )
    parser.add_argument('--version', action='version', version=f'{APP_NAME} {APP_VERSION}')
    subparsers = parser.add_subparsers(dest='command', required=True)

    assess = subparsers.add_parser('assess', parents=[common],
                                   help='grade one request on one node, printing the breakdown as JSON')
    assess.add_argument('node', help='node capacity file (JSON)')
    assess.add_argument('request', help='admission request file (JSON)')
    assess.add_argument('--proximity', metavar='PATH', help='proximity sample toward the listener (JSON)')
    assess.add_argument('--history', metavar='PATH', help='admission history (NDJSON)')

    simulate = subparsers.add_parser('simulate', parents=[common],
                                     help='negotiate a request over a topology, printing the trace as NDJSON')
    simulate.add_argument('topology', help='topology file (JSON)')
    simulate.add_argument('request', help='admission request file (JSON)')

    experiment = subparsers.add_parser('experiment', parents=[common],
                                       help='run a validation campaign, printing CSV')
    experiment.add_argument('name', choices=EXPERIMENTS)
    experiment.add_argument('--spec', metavar='PATH', help='experiment spec (YAML)')
    experiment.add_argument('--runs', type=int, metavar='N', help='override the runs per cell')
    return parser


def load_engine_config(args) -> EngineConfig:
    config = ConfigManager().load_config(args.config) if args.config else EngineConfig()
    if args.seed is not None:
        config = config.replace(rng_seed=args.seed)
    return config


def load_request(file_path) -> AdmissionRequest:
    try:
        with open(file_path, 'r') as f:
            return AdmissionRequest.from_json(f.read())
    except FileNotFoundError:
        raise FileNotFoundError(f"Request file not found: {file_path}")


def write_output(text: str, out: Optional[str]) -> None:
    if out in (None, '-'):
        sys.stdout.write(text)
        return
    with open(out, 'w', newline='') as f:
        f.write(text)


def cmd_assess(args) -> int:
    config = load_engine_config(args)
    node = load_node(args.node, config)
    if args.history:
        node.history_log = HistoryLog.load_ndjson(args.history, window=config.history_window)
    proximity = None
    if args.proximity:
        try:
            with open(args.proximity, 'r') as f:
                proximity = ProximitySample.from_dict(json.load(f))
        except json.JSONDecodeError as e:
            raise ConfigValidationError(f"Invalid JSON in {args.proximity}: {str(e)}")
    request = load_request(args.request)

    breakdown = AssessmentManager(node).assess(request, proximity)
    write_output(json.dumps(breakdown.to_dict(), indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def cmd_simulate(args) -> int:
    config = load_engine_config(args)
    topology = load_topology(args.topology, config)
    request = load_request(args.request)

    trace = NegotiationSimulator(topology, seed=config.rng_seed).run_negotiation(request)
    logger.info(f"Negotiation {request.request_id or '(unnamed)'} {trace.outcome}: {' -> '.join(trace.path)}")
    write_output(trace.to_ndjson(), args.out)
    return EXIT_OK


def cmd_experiment(args) -> int:
    config = load_engine_config(args)
    spec = load_experiment_spec(args.spec) if args.spec else ExperimentSpec.default(args.name)
    if spec.name != args.name:
        raise ConfigValidationError(f"Spec {args.spec} describes {spec.name!r}, not {args.name!r}")
    overrides = {}
    if args.seed is not None:
        overrides['seed'] = args.seed
    if args.runs is not None:
        overrides['runs'] = args.runs
    if overrides:
        spec = dataclasses.replace(spec, **overrides)
    return run_experiment(spec, config, args.out)


COMMANDS = {
    'assess': cmd_assess,
    'simulate': cmd_simulate,
    'experiment': cmd_experiment,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments and run a subcommand.

    Returns:
        int: 0 on success, 1 on an input or contract error, 2 when the TAS
        example misses its expected values
    """
    args = build_parser().parse_args(argv)
    try:
        if args.log_level:
            set_log_level(args.log_level)
        return COMMANDS[args.command](args)
    except (NodeAssessError, FileNotFoundError, ValueError) as e:
        logger.error(f"{args.command} failed: {str(e)}")
        print(f"Error: {str(e)}", file=sys.stderr)
        return EXIT_ERROR
