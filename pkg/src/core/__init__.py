"""Shared domain types, configuration, logging and the suitability combination."""
from .errors import (
    ConfigValidationError,
    ContractViolationError,
    LoopDetectedError,
    NodeAssessError,
    ResourceConflictError,
    RouteExhaustedError,
    ScheduleLookupError,
    UnknownResourceTypeError,
)
from .models import AdmissionRequest, Requirement, SuitabilityBreakdown, as_rational
from .suitability import combine

__all__ = [
    'AdmissionRequest',
    'Requirement',
    'SuitabilityBreakdown',
    'as_rational',
    'combine',
    'NodeAssessError',
    'ContractViolationError',
    'ConfigValidationError',
    'UnknownResourceTypeError',
    'ResourceConflictError',
    'ScheduleLookupError',
    'RouteExhaustedError',
    'LoopDetectedError'
]
