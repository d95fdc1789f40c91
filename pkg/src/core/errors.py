"""Exception hierarchy shared by every NodeAssess module."""


class NodeAssessError(Exception):
    """Base class for all NodeAssess errors."""


class ContractViolationError(NodeAssessError, ValueError):
    """An argument lies outside the range an operation admits."""

    def __init__(self, name: str, value, admissible: str):
        self.name = name
        self.value = value
        self.admissible = admissible
        super().__init__(f"{name}={value!r} is outside {admissible}")


class ConfigValidationError(NodeAssessError, ValueError):
    """Configuration or input document is invalid."""


class UnknownResourceTypeError(NodeAssessError, KeyError):
    """A requirement names a kind that is not registered."""

    def __init__(self, kind: str):
        self.kind = kind
        super().__init__(kind)

    def __str__(self):
        return f"Unknown resource type: {self.kind}"


class ResourceConflictError(NodeAssessError):
    """A resource kind is registered twice."""


class ScheduleLookupError(NodeAssessError, LookupError):
    """A traffic class or interface does not exist."""


class RouteExhaustedError(NodeAssessError):
    """No neighbor offers a path toward the listener."""


class LoopDetectedError(NodeAssessError):
    """A negotiation exceeded its hop limit."""
