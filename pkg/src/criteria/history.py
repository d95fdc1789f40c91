"""Historical-performance criterion and its salt."""
import numpy as np

from src.core.suitability import check_range
from src.history.metrics import HistoryMetrics


def history_grade(weighted, salt, theta):
    """(1 - theta) * weighted + theta * salt, element-wise.

    Raises:
        ContractViolationError: If an argument is outside [0, 1]
    """
    check_range("weighted_history", weighted)
    check_range("salt", salt)
    check_range("salt_weight", theta)
    grade = (1 - theta) * np.asarray(weighted, dtype=float) + theta * np.asarray(salt, dtype=float)
    if np.ndim(grade) == 0:
        return float(grade)
    return grade


def assess_history(metrics: HistoryMetrics, salt, config):
    """(1 - theta) * sum(delta_i * rh_i) + theta * salt.

    salt may be a numpy array, giving one grade per element.

    Raises:
        ContractViolationError: If salt is outside [0, 1]
    """
    d1, d2, d3, d4 = config.delta
    weighted = d1 * metrics.rh1 + d2 * metrics.rh2 + d3 * metrics.rh3 + d4 * metrics.rh4
    return history_grade(min(weighted, 1.0), salt, config.salt_weight)


def draw_salt(rng: np.random.Generator) -> float:
    """One uniform draw in [0, 1) from the node's generator."""
    return float(rng.random())


def salt_rng(seed: int, *stream) -> np.random.Generator:
    """Generator for a seed, optionally split into an independent sub-stream."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=tuple(stream)))
