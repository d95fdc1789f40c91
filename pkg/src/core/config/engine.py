"""Immutable engine configuration."""
from dataclasses import asdict, dataclass, field
from typing import Tuple

from .defaults import get_default_config
from .validation import validate_engine_config


@dataclass(frozen=True)
class ProximityMaxima:
    """Normalizer bounds for the proximity sub-grades."""
    hop_max: float = 32
    rtt_max: float = 1.0
    pdv_max: float = 0.1


@dataclass(frozen=True)
class EngineConfig:
    """Per-node assessment parameters.

    Construction validates every field, so an EngineConfig instance always
    satisfies 0.5 < tau < 1, sum(delta) == 1 and 0 <= salt_weight < 0.01.
    """
    tau: float = 0.66
    p_max: int = 7
    delta: Tuple[float, float, float, float] = (0.25, 0.25, 0.25, 0.25)
    salt_weight: float = 1e-10
    proximity_maxima: ProximityMaxima = field(default_factory=ProximityMaxima)
    rng_seed: int = 0
    history_window: int = 256
    guard_fraction: float = 0.1
    hop_limit: int = 64

    def __post_init__(self):
        normalized = validate_engine_config(self.to_dict())
        # Normalized values replace coerced inputs (e.g. delta as a tuple)
        for key, value in normalized.items():
            if key == 'proximity_maxima':
                value = ProximityMaxima(**value)
            object.__setattr__(self, key, value)

    def to_dict(self) -> dict:
        """Convert to dictionary for serialization."""
        data = asdict(self)
        data['delta'] = list(self.delta)
        return data

    @classmethod
    def from_dict(cls, data: dict) -> 'EngineConfig':
        """Create from a (possibly partial) configuration dictionary."""
        normalized = validate_engine_config(data)
        maxima = normalized.pop('proximity_maxima')
        return cls(proximity_maxima=ProximityMaxima(**maxima), **normalized)

    def replace(self, **changes) -> 'EngineConfig':
        """Return a copy with some fields changed (and re-validated)."""
        data = {**self.to_dict(), **changes}
        if isinstance(data['proximity_maxima'], ProximityMaxima):
            data['proximity_maxima'] = asdict(data['proximity_maxima'])
        return EngineConfig.from_dict(data)


def default_engine_config() -> EngineConfig:
    """Build the configuration defined by get_default_config()."""
    return EngineConfig.from_dict(get_default_config())

