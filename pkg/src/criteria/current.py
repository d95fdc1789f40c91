"""Current-resources criterion: order-weighted combination of requirement grades."""
from typing import List, Sequence

from src.core.errors import ContractViolationError
from src.core.suitability import check_range


def assess_current(rhos: Sequence[float], tau: float) -> float:
    """Combine per-requirement grades, earlier requirements weighing more.

    f(rho) = rho_0                                   for one requirement
    f(rho) = tau * rho_0 + (1 - tau) * f(rho[1:])    otherwise

    Any zero grade cancels the criterion outright.

    Args:
        rhos: Per-requirement grades in list order, each in [0, 1]
        tau: Requirement weight in (0.5, 1)

    Returns:
        float: Criterion grade in [0, 1]

    Raises:
        ContractViolationError: On an empty list or out-of-range grade
    """
    rhos = [float(rho) for rho in rhos]
    if not rhos:
        raise ContractViolationError("rhos", [], "a non-empty list")
    check_range("rho", rhos)
    if not 0.5 < tau < 1.0:
        raise ContractViolationError("tau", tau, "(0.5, 1.0)")
    if any(rho == 0.0 for rho in rhos):
        return 0.0

    value = rhos[-1]
    for rho in reversed(rhos[:-1]):
        value = tau * rho + (1 - tau) * value
    return value


def requirement_weights(count: int, tau: float) -> List[float]:
    """Effective weight of each position: tau(1-tau)^i, the last gets (1-tau)^(n-1)."""
    if count < 1:
        raise ContractViolationError("count", count, "[1, +inf)")
    weights = [tau * (1 - tau) ** i for i in range(count - 1)]
    weights.append((1 - tau) ** (count - 1))
    return weights
