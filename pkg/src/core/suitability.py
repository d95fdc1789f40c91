"""Top-level combination of the five criterion grades."""
import numpy as np

from .errors import ContractViolationError


def check_range(name, value, low=0.0, high=1.0, low_open=False):
    """Raise if any element of value lies outside [low, high] (or (low, high]).

    Works on scalars and numpy arrays alike.

    Raises:
        ContractViolationError: Naming the offending criterion
    """
    values = np.asarray(value, dtype=float)
    below = values <= low if low_open else values < low
    bad = below | (values > high) | np.isnan(values)
    if np.any(bad):
        offending = values[bad].flat[0] if values.ndim else float(values)
        bracket = "(" if low_open else "["
        raise ContractViolationError(name, float(offending), f"{bracket}{low}, {high}]")


def combine(bare_metal, current, priority_grade, proximity, history):
    """Combine the five criteria into a suitability value.

    B = bare_metal * current * priority_grade * (proximity + history) / 2.
    The three request-derived factors multiply so any of them cancels B;
    proximity and history are averaged so neither cancels the other.

    Args:
        bare_metal: 0 or 1
        current: Current-resources grade in [0, 1]
        priority_grade: Priority grade in (0, 1]
        proximity: Proximity grade in [0, 1]
        history: Historical-performance grade in [0, 1]

    Returns:
        Suitability in [0, 1]; a float for scalar inputs, an ndarray when any
        input is an array

    Raises:
        ContractViolationError: If an input is out of range
    """
    bm = np.asarray(bare_metal)
    if np.any((bm != 0) & (bm != 1)):
        raise ContractViolationError("bare_metal", bare_metal, "{0, 1}")
    check_range("current_resources", current)
    check_range("priority_grade", priority_grade, low_open=True)
    check_range("proximity", proximity)
    check_range("history", history)

    result = bare_metal * current * priority_grade * (proximity + history) / 2
    if np.ndim(result) == 0:
        return float(result)
    return result
