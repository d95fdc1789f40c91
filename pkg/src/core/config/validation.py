"""Configuration validation."""
import math

from src.core.errors import ConfigValidationError
from src.core.logger import setup_logger

from .defaults import get_default_config

logger = setup_logger(__name__)

TAU_MIN = 0.5
TAU_MAX = 1.0
SALT_WEIGHT_MAX = 0.01
DELTA_TOLERANCE = 1e-12
SEED_LIMIT = 2 ** 64


def validate_engine_config(config):
    """Validate and normalize an engine configuration mapping.

    Missing keys take their defaults; numeric strings (YAML leaves `1e-10`
    unresolved) are coerced.

    Args:
        config: Configuration dictionary to validate

    Returns:
        dict: Normalized configuration with every key present

    Raises:
        ConfigValidationError: If configuration is invalid
    """
    if config is None:
        config = {}
    if not isinstance(config, dict):
        raise ConfigValidationError("Configuration must be a dictionary")

    defaults = get_default_config()
    unknown = sorted(set(config) - set(defaults))
    if unknown:
        raise ConfigValidationError(f"Unknown configuration keys: {', '.join(unknown)}")

    merged = {**defaults, **config}
    try:
        normalized = {
            'tau': validate_tau(merged['tau']),
            'p_max': validate_p_max(merged['p_max']),
            'delta': validate_delta(merged['delta']),
            'salt_weight': validate_salt_weight(merged['salt_weight']),
            'proximity_maxima': validate_proximity_maxima(merged['proximity_maxima']),
            'rng_seed': validate_seed(merged['rng_seed']),
            'history_window': _positive_int('history_window', merged['history_window']),
            'guard_fraction': validate_guard_fraction(merged['guard_fraction']),
            'hop_limit': _positive_int('hop_limit', merged['hop_limit'])
        }
    except ConfigValidationError as e:
        logger.error(f"Configuration validation failed: {str(e)}")
        raise
    return normalized


def validate_tau(value):
    """Validate the requirement weight, exclusive bounds (0.5, 1.0)."""
    tau = _number('tau', value)
    if not TAU_MIN < tau < TAU_MAX:
        raise ConfigValidationError(
            f"tau must satisfy {TAU_MIN} < tau < {TAU_MAX}, got {tau!r}"
        )
    return tau


def validate_p_max(value):
    """Validate the maximum priority level."""
    p_max = _integer('p_max', value)
    if p_max < 0:
        raise ConfigValidationError(f"p_max must be >= 0, got {p_max}")
    return p_max


def validate_delta(value):
    """Validate the four history weights, which must sum to 1."""
    if not isinstance(value, (list, tuple)) or len(value) != 4:
        raise ConfigValidationError(f"delta must be a list of four weights, got {value!r}")
    weights = tuple(_number(f"delta[{i}]", v) for i, v in enumerate(value))
    for i, weight in enumerate(weights):
        if weight < 0:
            raise ConfigValidationError(f"delta[{i}] must be >= 0, got {weight!r}")
    total = math.fsum(weights)
    if abs(total - 1.0) > DELTA_TOLERANCE:
        raise ConfigValidationError(
            f"delta weights must sum to 1 within {DELTA_TOLERANCE}, got {total!r}"
        )
    return weights


def validate_salt_weight(value):
    """Validate the salt weight, 0 <= salt_weight < 0.01."""
    weight = _number('salt_weight', value)
    if not 0.0 <= weight < SALT_WEIGHT_MAX:
        raise ConfigValidationError(
            f"salt_weight must satisfy 0 <= salt_weight < {SALT_WEIGHT_MAX}, got {weight!r}"
        )
    return weight


def validate_proximity_maxima(value):
    """Validate the proximity normalizer bounds."""
    if not isinstance(value, dict):
        raise ConfigValidationError("proximity_maxima must be a dictionary")
    expected = {'hop_max', 'rtt_max', 'pdv_max'}
    if set(value) != expected:
        raise ConfigValidationError(
            f"proximity_maxima must have exactly the keys {sorted(expected)}, got {sorted(value)}"
        )
    maxima = {}
    for key in sorted(expected):
        bound = _number(f"proximity_maxima.{key}", value[key])
        if bound <= 0:
            raise ConfigValidationError(f"proximity_maxima.{key} must be > 0, got {bound!r}")
        maxima[key] = bound
    return maxima


def validate_seed(value):
    """Validate a 64-bit unsigned RNG seed."""
    seed = _integer('rng_seed', value)
    if not 0 <= seed < SEED_LIMIT:
        raise ConfigValidationError(f"rng_seed must be a 64-bit unsigned integer, got {seed}")
    return seed


def validate_guard_fraction(value):
    """Validate the TAS guard fraction."""
    fraction = _number('guard_fraction', value)
    if fraction < 0:
        raise ConfigValidationError(f"guard_fraction must be >= 0, got {fraction!r}")
    return fraction


def _positive_int(name, value):
    number = _integer(name, value)
    if number <= 0:
        raise ConfigValidationError(f"{name} must be > 0, got {number}")
    return number


def _number(name, value):
    if isinstance(value, bool):
        raise ConfigValidationError(f"{name} must be a number, got {value!r}")
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise ConfigValidationError(f"{name} must be a number, got {value!r}")
    if not math.isfinite(number):
        raise ConfigValidationError(f"{name} must be finite, got {value!r}")
    return number


def _integer(name, value):
    if isinstance(value, bool):
        raise ConfigValidationError(f"{name} must be an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            pass
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise ConfigValidationError(f"{name} must be an integer, got {value!r}")
    if not number.is_integer():
        raise ConfigValidationError(f"{name} must be an integer, got {value!r}")
    return int(number)
