"""Time-aware shaper schedule model.

Times are exact Fractions in seconds; the JSON form uses milliseconds.
"""
import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from src.core.errors import ConfigValidationError, ContractViolationError, ScheduleLookupError
from src.core.logger import setup_logger
from src.core.models import as_rational, rational_to_json

logger = setup_logger(__name__)

MS = Fraction(1, 1000)


@dataclass(frozen=True)
class ServiceFlow:
    """A new service's message: size D in bits plus its guard fraction."""
    data_size: Fraction
    guard_fraction: Fraction = Fraction(1, 10)
    assigned_class: Optional[str] = None

    def __post_init__(self):
        size = as_rational(self.data_size, "data_size")
        guard = as_rational(self.guard_fraction, "guard_fraction")
        if size <= 0:
            raise ContractViolationError("data_size", rational_to_json(size), "(0, +inf) bits")
        if guard < 0:
            raise ContractViolationError("guard_fraction", rational_to_json(guard), "[0, +inf)")
        object.__setattr__(self, 'data_size', size)
        object.__setattr__(self, 'guard_fraction', guard)


@dataclass(frozen=True)
class FlowEntry:
    """One occupied line item of a class: a flow's transmission or its guard."""
    label: str
    t_tx: Fraction

    def to_dict(self) -> dict:
        return {'label': self.label, 't_tx_ms': rational_to_json(self.t_tx / MS)}


@dataclass
class TrafficClass:
    """A gate of the GCL: its open duration and the flows it already carries."""
    class_id: str
    t_open: Fraction
    flows: List[FlowEntry] = field(default_factory=list)

    def __post_init__(self):
        self.t_open = as_rational(self.t_open, f"{self.class_id}.t_open")
        if self.t_open <= 0:
            raise ContractViolationError(f"{self.class_id}.t_open", rational_to_json(self.t_open),
                                         "(0, +inf) s")
        if self.occupied() > self.t_open:
            raise ContractViolationError(f"{self.class_id}.flows", rational_to_json(self.occupied()),
                                         f"[0, t_open={rational_to_json(self.t_open)}] s")

    def occupied(self) -> Fraction:
        return sum((entry.t_tx for entry in self.flows), Fraction(0))

    def free_time(self) -> Fraction:
        """Time left for new services: t_open minus every occupied entry."""
        return self.t_open - self.occupied()

    def to_dict(self) -> dict:
        return {
            'class_id': self.class_id,
            't_open_ms': rational_to_json(self.t_open / MS),
            'flows': [entry.to_dict() for entry in self.flows]
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'TrafficClass':
        try:
            class_id = str(data['class_id'])
            t_open = as_rational(data['t_open_ms'], f"{class_id}.t_open_ms") * MS
            flows = [
                FlowEntry(label=str(item.get('label', '')),
                          t_tx=as_rational(item['t_tx_ms'], f"{class_id}.t_tx_ms") * MS)
                for item in data.get('flows') or []
            ]
        except (KeyError, TypeError, AttributeError) as e:
            raise ConfigValidationError(f"Invalid traffic class {data!r}: missing {e}")
        return cls(class_id=class_id, t_open=t_open, flows=flows)


@dataclass
class TasSchedule:
    """Per-interface gate control list: the cycle of traffic classes."""
    interface_id: str
    bandwidth_bps: Fraction
    classes: List[TrafficClass] = field(default_factory=list)

    def __post_init__(self):
        self.bandwidth_bps = as_rational(self.bandwidth_bps, "bandwidth_bps")

    def traffic_class(self, class_id: str) -> TrafficClass:
        """Look up a class by id.

        Raises:
            ScheduleLookupError: If the class does not exist
        """
        for traffic_class in self.classes:
            if traffic_class.class_id == class_id:
                return traffic_class
        raise ScheduleLookupError(f"Interface {self.interface_id} has no traffic class {class_id!r}")

    def to_dict(self) -> dict:
        return {
            'interface_id': self.interface_id,
            'bandwidth_bps': rational_to_json(self.bandwidth_bps),
            'classes': [traffic_class.to_dict() for traffic_class in self.classes]
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'TasSchedule':
        try:
            interface_id = str(data['interface_id'])
            bandwidth = data['bandwidth_bps']
            classes = data['classes']
        except (KeyError, TypeError) as e:
            raise ConfigValidationError(f"Invalid TAS schedule: missing {e}")
        if not isinstance(classes, list):
            raise ConfigValidationError(f"TAS schedule {interface_id}: 'classes' must be an array")
        return cls(interface_id=interface_id, bandwidth_bps=bandwidth,
                   classes=[TrafficClass.from_dict(item) for item in classes])


def load_schedule(file_path) -> TasSchedule:
    """Load a TAS schedule JSON file.

    Raises:
        FileNotFoundError: If file doesn't exist
        ConfigValidationError: If the document is invalid
    """
    if not os.path.exists(file_path):
        raise FileNotFoundError(f"TAS schedule file not found: {file_path}")
    try:
        with open(file_path, 'r') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        logger.error(f"Failed to parse TAS schedule {file_path}: {str(e)}")
        raise ConfigValidationError(f"Invalid JSON in {file_path}: {str(e)}")
    return TasSchedule.from_dict(data)
