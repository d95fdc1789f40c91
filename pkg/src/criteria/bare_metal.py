"""Bare-metal criterion: can the node's total resources ever host the request?"""
from typing import Optional

from src.core.logger import setup_logger
from src.core.models import AdmissionRequest

logger = setup_logger(__name__)


def first_bare_metal_failure(request: AdmissionRequest, node, registry) -> Optional[str]:
    """Kind of the first requirement the node's totals cannot support, else None.

    Requirements are checked in list order and checking stops at the first
    failure.

    Raises:
        UnknownResourceTypeError: If a requirement's kind is not registered
    """
    for requirement in request.requirements:
        descriptor = registry.validate_requirement(requirement)
        if not descriptor.bare_metal_check(requirement, node):
            logger.debug(f"Node {node.node_id} fails bare-metal check on {requirement.kind}")
            return requirement.kind
    return None


def assess_bare_metal(request: AdmissionRequest, node, registry) -> int:
    """1 iff every requirement fits the node's total capacities."""
    return 0 if first_bare_metal_failure(request, node, registry) is not None else 1
