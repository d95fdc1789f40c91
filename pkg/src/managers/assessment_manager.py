"""Per-node assessment engine."""
from typing import Optional

import numpy as np

from src.core.models import AdmissionRequest, SuitabilityBreakdown
from src.core.logger import setup_logger
from src.core.suitability import check_range, combine
from src.criteria import (
    ProximitySample,
    assess_current,
    assess_history,
    assess_proximity,
    draw_salt,
    first_bare_metal_failure,
    grade_priority,
    salt_rng,
)
from src.history.metrics import compute_metrics
from src.resources import NodeState, ResourceRegistry, default_registry

PERFECT_PROXIMITY = ProximitySample()


class AssessmentManager:
    """Self-assessment of one node against admission requests.

    The manager owns the node's salt generator; it must not be shared
    between concurrent assessments.
    """

    def __init__(self, node: NodeState, registry: Optional[ResourceRegistry] = None,
                 rng: Optional[np.random.Generator] = None):
        """Initialize the engine for a node.

        Args:
            node: Node snapshot to assess
            registry: Resource registry (built-in kinds when None)
            rng: Salt generator (seeded from node.config.rng_seed when None)
        """
        self.logger = setup_logger(self.__class__.__name__)
        self.node = node
        self.config = node.config
        self.registry = registry if registry is not None else default_registry()
        self.rng = rng if rng is not None else salt_rng(self.config.rng_seed)

    def assess(self, request: AdmissionRequest, proximity: Optional[ProximitySample] = None,
               salt: Optional[float] = None) -> SuitabilityBreakdown:
        """Compute the suitability of this node for a request.

        Args:
            request: Admission request to assess
            proximity: Path conditions toward the listener (perfect when None)
            salt: Salt override; drawn from the node's generator when None

        Returns:
            SuitabilityBreakdown: Every criterion grade and the combined value

        Raises:
            UnknownResourceTypeError: If a requirement's kind is not registered
            ContractViolationError: If the request is malformed for this node
        """
        request.validate(self.config.p_max)
        self.registry.validate_request(request)
        priority_grade = grade_priority(request.priority, self.config.p_max)

        failing_kind = first_bare_metal_failure(request, self.node, self.registry)
        if failing_kind is not None:
            breakdown = SuitabilityBreakdown(
                bare_metal=0, current_resources=0.0, priority_grade=priority_grade,
                proximity=0.0, history=0.0, suitability=0.0, per_requirement=(),
                failing_kind=failing_kind
            )
            self.logger.debug(f"Node {self.node.node_id} request {request.request_id}: "
                              f"bare-metal failure on {failing_kind}")
            return breakdown

        per_requirement = []
        for requirement in request.requirements:
            descriptor = self.registry.get(requirement.kind)
            rho = float(descriptor.capability_grade(requirement, self.node))
            check_range(f"{requirement.kind}.rho", rho)
            per_requirement.append((requirement.kind, rho))
        current = assess_current([rho for _, rho in per_requirement], self.config.tau)

        proximity_grade = assess_proximity(proximity or PERFECT_PROXIMITY, self.config)

        log = self.node.history_log
        metrics = compute_metrics(log.records, log.samples, request, self.node.totals)
        if salt is None:
            salt = draw_salt(self.rng)
        history = assess_history(metrics, salt, self.config)

        suitability = combine(1, current, priority_grade, proximity_grade, history)
        breakdown = SuitabilityBreakdown(
            bare_metal=1, current_resources=current, priority_grade=priority_grade,
            proximity=proximity_grade, history=history, suitability=suitability,
            per_requirement=tuple(per_requirement)
        )
        self.logger.debug(f"Node {self.node.node_id} request {request.request_id}: {breakdown.to_dict()}")
        return breakdown
