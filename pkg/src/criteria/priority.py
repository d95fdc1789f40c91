"""Priority criterion."""
from src.core.errors import ContractViolationError
from src.core.models import DEFAULT_P_MAX


def grade_priority(priority: int, p_max: int = DEFAULT_P_MAX) -> float:
    """(priority + 1) / (p_max + 1): never 0, exactly 1 at p_max.

    Raises:
        ContractViolationError: If priority is outside [0, p_max]
    """
    if isinstance(priority, bool) or int(priority) != priority or not 0 <= priority <= p_max:
        raise ContractViolationError("priority", priority, f"[0, {p_max}]")
    return (int(priority) + 1) / (p_max + 1)
