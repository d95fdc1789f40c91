"""Domain types shared by all modules."""
import json
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Dict, Optional, Tuple, Union

from .errors import ConfigValidationError, ContractViolationError

Scalar = Union[int, float, str, bool]
DEFAULT_P_MAX = 7


def as_rational(value, name: str = "amount") -> Fraction:
    """Convert a JSON number, decimal string or rational to an exact Fraction.

    Floats go through their shortest repr so 0.1 becomes 1/10, not the
    binary expansion.
    """
    if isinstance(value, bool):
        raise ContractViolationError(name, value, "a number")
    if isinstance(value, Rational):
        return Fraction(value)
    try:
        return Fraction(str(value).strip())
    except (TypeError, ValueError):
        raise ContractViolationError(name, value, "a number")


def rational_to_json(value: Fraction):
    """Render a Fraction as an int when integral, else as a float."""
    if value.denominator == 1:
        return value.numerator
    return float(value)


@dataclass(frozen=True)
class Requirement:
    """One element of a requirement list: a resource kind and its demand."""
    kind: str
    amount: Fraction
    params: Dict[str, Scalar] = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.kind, str) or not self.kind:
            raise ContractViolationError("kind", self.kind, "a non-empty string")
        amount = as_rational(self.amount, f"{self.kind}.amount")
        if amount < 0:
            raise ContractViolationError(f"{self.kind}.amount", self.amount, "[0, +inf)")
        object.__setattr__(self, 'amount', amount)
        object.__setattr__(self, 'params', dict(self.params or {}))

    def to_dict(self) -> dict:
        """Convert to dictionary for serialization."""
        data = {'kind': self.kind, 'amount': rational_to_json(self.amount)}
        if self.params:
            data['params'] = dict(self.params)
        return data

    @classmethod
    def from_dict(cls, data: dict) -> 'Requirement':
        """Create from dictionary."""
        try:
            return cls(kind=data['kind'], amount=data['amount'], params=data.get('params') or {})
        except (KeyError, TypeError) as e:
            raise ConfigValidationError(f"Invalid requirement {data!r}: missing {e}")


@dataclass(frozen=True)
class AdmissionRequest:
    """An ordered requirement list plus a priority; index 0 is most relevant.

    strict_reservation marks a request whose reservation must be held in
    full for its lifetime.
    """
    requirements: Tuple[Requirement, ...]
    priority: int
    talker: str = ""
    listener: str = ""
    request_id: str = ""
    strict_reservation: bool = False

    def __post_init__(self):
        requirements = tuple(self.requirements)
        if not requirements:
            raise ContractViolationError("requirements", [], "a non-empty list")
        object.__setattr__(self, 'requirements', requirements)
        if isinstance(self.priority, bool) or not isinstance(self.priority, int) or self.priority < 0:
            raise ContractViolationError("priority", self.priority, "an integer >= 0")

    def validate(self, p_max: int = DEFAULT_P_MAX) -> None:
        """Check the priority against a node's p_max.

        Raises:
            ContractViolationError: If priority > p_max
        """
        if self.priority > p_max:
            raise ContractViolationError("priority", self.priority, f"[0, {p_max}]")

    @property
    def kinds(self) -> Tuple[str, ...]:
        return tuple(req.kind for req in self.requirements)

    def to_dict(self) -> dict:
        """Convert to dictionary for serialization."""
        data = {
            'requirements': [req.to_dict() for req in self.requirements],
            'priority': self.priority,
            'talker': self.talker,
            'listener': self.listener,
            'request_id': self.request_id
        }
        if self.strict_reservation:
            data['strict_reservation'] = True
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> 'AdmissionRequest':
        """Create from dictionary."""
        if not isinstance(data, dict):
            raise ConfigValidationError("Admission request must be a JSON object")
        requirements = data.get('requirements')
        if not isinstance(requirements, list):
            raise ConfigValidationError("Admission request 'requirements' must be an array")
        if 'priority' not in data:
            raise ConfigValidationError("Admission request is missing 'priority'")
        return cls(
            requirements=tuple(Requirement.from_dict(item) for item in requirements),
            priority=data['priority'],
            talker=str(data.get('talker', '')),
            listener=str(data.get('listener', '')),
            request_id=str(data.get('request_id', '')),
            strict_reservation=bool(data.get('strict_reservation', False))
        )

    @classmethod
    def from_json(cls, text: str) -> 'AdmissionRequest':
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as e:
            raise ConfigValidationError(f"Invalid admission request JSON: {str(e)}")


@dataclass(frozen=True)
class SuitabilityBreakdown:
    """The five criterion grades of one assessment and their combination.

    per_requirement holds (kind, rho) in assessment order; it stops at the
    first bare-metal failure, whose kind is kept in failing_kind.
    """
    bare_metal: int
    current_resources: float
    priority_grade: float
    proximity: float
    history: float
    suitability: float
    per_requirement: Tuple[Tuple[str, float], ...] = ()
    failing_kind: Optional[str] = None

    def to_dict(self) -> dict:
        """Convert to dictionary for serialization."""
        return {
            'bare_metal': self.bare_metal,
            'current_resources': self.current_resources,
            'priority_grade': self.priority_grade,
            'proximity': self.proximity,
            'history': self.history,
            'suitability': self.suitability,
            'per_requirement': [[kind, rho] for kind, rho in self.per_requirement],
            'failing_kind': self.failing_kind
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> 'SuitabilityBreakdown':
        """Create from dictionary."""
        return cls(
            bare_metal=int(data['bare_metal']),
            current_resources=float(data['current_resources']),
            priority_grade=float(data['priority_grade']),
            proximity=float(data['proximity']),
            history=float(data['history']),
            suitability=float(data['suitability']),
            per_requirement=tuple((str(kind), float(rho)) for kind, rho in data.get('per_requirement', [])),
            failing_kind=data.get('failing_kind')
        )
