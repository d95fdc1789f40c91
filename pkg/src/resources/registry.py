"""Resource type registry: kind -> (bare-metal check, capability grade)."""
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterator, List

from src.core.errors import ContractViolationError, ResourceConflictError, UnknownResourceTypeError
from src.core.logger import setup_logger
from src.core.models import AdmissionRequest, Requirement

BareMetalCheck = Callable[[Requirement, "NodeState"], int]
CapabilityGrade = Callable[[Requirement, "NodeState"], float]


@dataclass(frozen=True)
class ResourceTypeDescriptor:
    """How one resource kind is assessed.

    bare_metal_check looks only at total capacities and returns 0 or 1;
    capability_grade looks at current availability and returns [0, 1].
    """
    kind: str
    bare_metal_check: BareMetalCheck
    capability_grade: CapabilityGrade
    accepted_params: FrozenSet[str] = field(default_factory=frozenset)
    description: str = ""


class ResourceRegistry:
    """Write-once-then-read-many map of resource kinds to descriptors."""

    def __init__(self):
        """Initialize an empty registry."""
        self.logger = setup_logger(self.__class__.__name__)
        self._descriptors: Dict[str, ResourceTypeDescriptor] = {}

    def register(self, descriptor: ResourceTypeDescriptor) -> None:
        """Register a resource kind.

        Raises:
            ResourceConflictError: If the kind is already registered
        """
        if not descriptor.kind:
            raise ContractViolationError("kind", descriptor.kind, "a non-empty string")
        if descriptor.kind in self._descriptors:
            raise ResourceConflictError(f"Resource type already registered: {descriptor.kind}")
        self._descriptors[descriptor.kind] = descriptor
        self.logger.debug(f"Registered resource type {descriptor.kind}")

    def get(self, kind: str) -> ResourceTypeDescriptor:
        """Resolve a kind.

        Raises:
            UnknownResourceTypeError: If the kind is not registered
        """
        try:
            return self._descriptors[kind]
        except KeyError:
            raise UnknownResourceTypeError(kind) from None

    def __contains__(self, kind: str) -> bool:
        return kind in self._descriptors

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self._descriptors))

    def kinds(self) -> List[str]:
        return sorted(self._descriptors)

    def validate_requirement(self, requirement: Requirement) -> ResourceTypeDescriptor:
        """Resolve a requirement's kind and reject params the kind does not use.

        Raises:
            UnknownResourceTypeError: If the kind is not registered
            ContractViolationError: If params holds keys the kind ignores
        """
        descriptor = self.get(requirement.kind)
        unused = sorted(set(requirement.params) - descriptor.accepted_params)
        if unused:
            raise ContractViolationError(
                f"{requirement.kind}.params", unused,
                f"accepted params {sorted(descriptor.accepted_params)}"
            )
        return descriptor

    def validate_request(self, request: AdmissionRequest) -> List[ResourceTypeDescriptor]:
        """Validate every requirement of a request, in list order."""
        return [self.validate_requirement(req) for req in request.requirements]
