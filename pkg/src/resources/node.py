"""Node capacity model."""
import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from src.core.config import EngineConfig
from src.core.errors import ConfigValidationError, ContractViolationError
from src.core.logger import setup_logger
from src.core.models import as_rational, rational_to_json
from src.history.log import HistoryLog
from src.tsn.schedule import TasSchedule

logger = setup_logger(__name__)


@dataclass
class NetworkInterface:
    """A network interface with its bandwidth and optional TAS schedule."""
    interface_id: str
    bandwidth_bps: Fraction
    tas: Optional[TasSchedule] = None

    def __post_init__(self):
        self.bandwidth_bps = as_rational(self.bandwidth_bps, f"{self.interface_id}.bandwidth_bps")
        if self.bandwidth_bps <= 0:
            raise ContractViolationError(f"{self.interface_id}.bandwidth_bps",
                                         rational_to_json(self.bandwidth_bps), "(0, +inf)")

    def to_dict(self) -> dict:
        """Convert to dictionary for serialization."""
        if self.tas is not None:
            return self.tas.to_dict()
        return {'interface_id': self.interface_id,
                'bandwidth_bps': rational_to_json(self.bandwidth_bps)}

    @classmethod
    def from_dict(cls, data: dict) -> 'NetworkInterface':
        """Create from dictionary; a 'classes' key carries a TAS schedule."""
        try:
            interface_id = str(data['interface_id'])
            bandwidth = data['bandwidth_bps']
        except (KeyError, TypeError) as e:
            raise ConfigValidationError(f"Invalid interface {data!r}: missing {e}")
        tas = TasSchedule.from_dict(data) if 'classes' in data else None
        return cls(interface_id=interface_id, bandwidth_bps=bandwidth, tas=tas)


@dataclass
class NodeState:
    """A node's declared capacities, current usage, interfaces and history.

    totals are bare-metal capacities; in_use is what current reservations
    hold. 0 <= in_use[k] <= totals[k] for every kind.
    """
    node_id: str
    totals: Dict[str, Fraction] = field(default_factory=dict)
    in_use: Dict[str, Fraction] = field(default_factory=dict)
    interfaces: List[NetworkInterface] = field(default_factory=list)
    history_log: HistoryLog = None
    config: EngineConfig = field(default_factory=EngineConfig)

    def __post_init__(self):
        self.totals = {kind: as_rational(v, f"totals.{kind}") for kind, v in self.totals.items()}
        self.in_use = {kind: as_rational(v, f"in_use.{kind}") for kind, v in self.in_use.items()}
        for kind, total in self.totals.items():
            if total < 0:
                raise ContractViolationError(f"totals.{kind}", rational_to_json(total), "[0, +inf)")
        for kind, used in self.in_use.items():
            total = self.totals.get(kind, Fraction(0))
            if not 0 <= used <= total:
                raise ContractViolationError(f"in_use.{kind}", rational_to_json(used),
                                             f"[0, {rational_to_json(total)}]")
        if self.history_log is None:
            self.history_log = HistoryLog(window=self.config.history_window)

    def total(self, kind: str) -> Fraction:
        """Bare-metal capacity of a kind (0 when undeclared)."""
        return self.totals.get(kind, Fraction(0))

    def available(self, kind: str) -> Fraction:
        """Currently available amount: totals - in_use."""
        return self.total(kind) - self.in_use.get(kind, Fraction(0))

    def interface(self, interface_id: str) -> Optional[NetworkInterface]:
        for iface in self.interfaces:
            if iface.interface_id == interface_id:
                return iface
        return None

    def to_dict(self) -> dict:
        """Convert to dictionary for serialization."""
        return {
            'node_id': self.node_id,
            'totals': {k: rational_to_json(v) for k, v in self.totals.items()},
            'in_use': {k: rational_to_json(v) for k, v in self.in_use.items()},
            'interfaces': [iface.to_dict() for iface in self.interfaces]
        }

    @classmethod
    def from_dict(cls, data: dict, config: Optional[EngineConfig] = None) -> 'NodeState':
        """Create from a node capacity document.

        Args:
            data: {node_id, totals, in_use, interfaces[]}
            config: Engine configuration for this node (defaults if None)
        """
        if not isinstance(data, dict) or 'node_id' not in data:
            raise ConfigValidationError("Node document must be an object with a 'node_id'")
        interfaces = data.get('interfaces') or []
        if not isinstance(interfaces, list):
            raise ConfigValidationError(f"Node {data['node_id']}: 'interfaces' must be an array")
        return cls(
            node_id=str(data['node_id']),
            totals=dict(data.get('totals') or {}),
            in_use=dict(data.get('in_use') or {}),
            interfaces=[NetworkInterface.from_dict(item) for item in interfaces],
            config=config if config is not None else EngineConfig()
        )


def load_node(file_path, config: Optional[EngineConfig] = None) -> NodeState:
    """Load a node capacity file.

    Raises:
        FileNotFoundError: If file doesn't exist
        ConfigValidationError: If the document is invalid
    """
    if not os.path.exists(file_path):
        raise FileNotFoundError(f"Node file not found: {file_path}")
    try:
        with open(file_path, 'r') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        logger.error(f"Failed to parse node file {file_path}: {str(e)}")
        raise ConfigValidationError(f"Invalid JSON in {file_path}: {str(e)}")
    node = NodeState.from_dict(data, config)
    logger.info(f"Loaded node {node.node_id} from {file_path}")
    return node
