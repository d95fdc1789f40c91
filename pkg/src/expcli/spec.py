"""Experiment specifications."""
import os
from dataclasses import dataclass
from typing import List, Optional, Tuple

import yaml

from src.core.errors import ConfigValidationError
from src.core.logger import setup_logger

logger = setup_logger(__name__)

SINGLE_REQ = "single-req"
MULTI_REQ = "multi-req"
SALT_SWEEP = "salt-sweep"
TAS_EXAMPLE = "tas-example"
EXPERIMENTS = (SINGLE_REQ, MULTI_REQ, SALT_SWEEP, TAS_EXAMPLE)

DEFAULT_THETAS = tuple(float(f"1e-{k}") for k in range(0, 21))

# Per-experiment defaults for every sweep parameter a spec file may omit
DEFAULTS = {
    SINGLE_REQ: {'runs': 100000, 'cores': range(0, 10), 'priorities': range(0, 8)},
    MULTI_REQ: {'runs': 1000, 'cores': range(0, 10), 'memory_gb': range(0, 34),
                'priorities': range(0, 8), 'taus': (0.51, 0.66, 0.99)},
    SALT_SWEEP: {'runs': 100000, 'cores': range(0, 8), 'priorities': range(0, 8),
                 'thetas': DEFAULT_THETAS},
    TAS_EXAMPLE: {'runs': 1},
}


@dataclass(frozen=True)
class ExperimentSpec:
    """One validation campaign: its grid, run count and seed.

    Ranges are stored expanded, e.g. cores=(0, 1, ..., 9).
    """
    name: str
    runs: int = 1
    cores: Tuple[int, ...] = ()
    memory_gb: Tuple[int, ...] = ()
    priorities: Tuple[int, ...] = ()
    taus: Tuple[float, ...] = ()
    thetas: Tuple[float, ...] = ()
    proximity_levels: int = 0
    seed: int = 0
    schedule: Optional[str] = None

    def __post_init__(self):
        if self.name not in EXPERIMENTS:
            raise ConfigValidationError(
                f"Unknown experiment {self.name!r}; expected one of {', '.join(EXPERIMENTS)}"
            )
        if isinstance(self.runs, bool) or not isinstance(self.runs, int) or self.runs <= 0:
            raise ConfigValidationError(f"runs must be a positive integer, got {self.runs!r}")
        if self.proximity_levels < 0 or self.proximity_levels == 1:
            raise ConfigValidationError(
                f"proximity_levels must be 0 (continuous) or >= 2, got {self.proximity_levels}"
            )
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigValidationError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        for name in self.required_axes():
            if not getattr(self, name):
                raise ConfigValidationError(f"Experiment {self.name}: '{name}' must not be empty")
        for value in self.taus:
            if not 0.5 < value < 1.0:
                raise ConfigValidationError(f"taus entries must satisfy 0.5 < tau < 1, got {value!r}")
        for value in self.thetas:
            if not 0.0 <= value <= 1.0:
                raise ConfigValidationError(f"thetas entries must lie in [0, 1], got {value!r}")
        for name in ('cores', 'memory_gb', 'priorities'):
            if any(value < 0 for value in getattr(self, name)):
                raise ConfigValidationError(f"'{name}' entries must be >= 0")

    def required_axes(self) -> List[str]:
        return [key for key in DEFAULTS[self.name] if key != 'runs']

    def to_dict(self) -> dict:
        return {
            'name': self.name, 'runs': self.runs, 'cores': list(self.cores),
            'memory_gb': list(self.memory_gb), 'priorities': list(self.priorities),
            'taus': list(self.taus), 'thetas': list(self.thetas),
            'proximity_levels': self.proximity_levels, 'seed': self.seed,
            'schedule': self.schedule
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'ExperimentSpec':
        """Create from a spec document, filling omitted axes with defaults.

        Axes are lists or {start, stop, step} mappings with an inclusive stop.
        """
        if not isinstance(data, dict) or 'name' not in data:
            raise ConfigValidationError("Experiment spec must be a mapping with a 'name'")
        name = str(data['name'])
        if name not in DEFAULTS:
            raise ConfigValidationError(
                f"Unknown experiment {name!r}; expected one of {', '.join(EXPERIMENTS)}"
            )
        known = set(cls.__dataclass_fields__)
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigValidationError(f"Unknown experiment keys: {', '.join(unknown)}")

        merged = {**DEFAULTS[name], **data}
        return cls(
            name=name,
            runs=_int('runs', merged['runs']),
            cores=tuple(_int('cores', v) for v in _axis('cores', merged.get('cores', ()))),
            memory_gb=tuple(_int('memory_gb', v) for v in _axis('memory_gb', merged.get('memory_gb', ()))),
            priorities=tuple(_int('priorities', v) for v in _axis('priorities', merged.get('priorities', ()))),
            taus=tuple(_float('taus', v) for v in _axis('taus', merged.get('taus', ()))),
            thetas=tuple(_float('thetas', v) for v in _axis('thetas', merged.get('thetas', ()))),
            proximity_levels=_int('proximity_levels', merged.get('proximity_levels', 0)),
            seed=_int('seed', merged.get('seed', 0)),
            schedule=merged.get('schedule')
        )

    @classmethod
    def default(cls, name: str, **overrides) -> 'ExperimentSpec':
        """Spec with every default for an experiment name."""
        return cls.from_dict({'name': name, **overrides})


def load_experiment_spec(file_path) -> ExperimentSpec:
    """Load an experiment spec YAML file.

    A relative schedule path is taken relative to the spec file's directory.

    Raises:
        FileNotFoundError: If file doesn't exist
        ConfigValidationError: If the document is invalid
    """
    if not os.path.exists(file_path):
        raise FileNotFoundError(f"Experiment spec not found: {file_path}")
    try:
        with open(file_path, 'r') as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        logger.error(f"Failed to parse experiment spec {file_path}: {str(e)}")
        raise ConfigValidationError(f"Invalid YAML in {file_path}: {str(e)}")
    schedule = data.get('schedule') if isinstance(data, dict) else None
    if isinstance(schedule, str) and not os.path.isabs(schedule):
        spec_dir = os.path.dirname(os.path.abspath(file_path))
        data['schedule'] = os.path.normpath(os.path.join(spec_dir, schedule))
    spec = ExperimentSpec.from_dict(data)
    logger.info(f"Loaded experiment spec {spec.name} from {file_path}")
    return spec


def _axis(name, value):
    if isinstance(value, range):
        return list(value)
    if isinstance(value, dict):
        try:
            start, stop = value['start'], value['stop']
        except KeyError as e:
            raise ConfigValidationError(f"Range '{name}' is missing {e}")
        step = value.get('step', 1)
        if _int(f"{name}.step", step) <= 0:
            raise ConfigValidationError(f"Range '{name}' needs a positive step")
        return list(range(_int(f"{name}.start", start), _int(f"{name}.stop", stop) + 1, _int(name, step)))
    if isinstance(value, (list, tuple)):
        return list(value)
    raise ConfigValidationError(f"'{name}' must be a list or a {{start, stop}} range, got {value!r}")


def _int(name, value):
    if isinstance(value, bool):
        raise ConfigValidationError(f"{name} must be an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and value.strip().lstrip("-").isdigit():
        return int(value)
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise ConfigValidationError(f"{name} must be an integer, got {value!r}")
    if not number.is_integer():
        raise ConfigValidationError(f"{name} must be an integer, got {value!r}")
    return int(number)


def _float(name, value):
    if isinstance(value, bool):
        raise ConfigValidationError(f"{name} must be a number, got {value!r}")
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ConfigValidationError(f"{name} must be a number, got {value!r}")
