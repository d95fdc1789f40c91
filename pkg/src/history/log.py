"""Per-node admission log and capacity samples."""
import json
import os
from collections import deque
from dataclasses import asdict, dataclass, field
from typing import Deque, Dict

from src.core.errors import ConfigValidationError, ContractViolationError
from src.core.logger import setup_logger

DEFAULT_WINDOW = 256


@dataclass(frozen=True)
class AdmissionRecord:
    """Outcome of one past admission request at this node."""
    request_id: str
    requirement_count: int
    granted: bool
    strict_reservation: bool = False
    used_fraction: float = 0.0
    timestamp: int = 0

    def __post_init__(self):
        if self.requirement_count < 1:
            raise ContractViolationError("requirement_count", self.requirement_count, "[1, +inf)")
        if not 0.0 <= self.used_fraction <= 1.0:
            raise ContractViolationError("used_fraction", self.used_fraction, "[0, 1]")

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> 'AdmissionRecord':
        return cls(
            request_id=str(data['request_id']),
            requirement_count=int(data['requirement_count']),
            granted=bool(data['granted']),
            strict_reservation=bool(data.get('strict_reservation', False)),
            used_fraction=float(data.get('used_fraction', 0.0)),
            timestamp=int(data['timestamp'])
        )


@dataclass(frozen=True)
class CapacitySample:
    """Snapshot of available amounts per kind at one tick."""
    timestamp: int
    available: Dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        for kind, amount in self.available.items():
            if amount < 0:
                raise ContractViolationError(f"available.{kind}", amount, "[0, +inf)")

    def to_dict(self) -> dict:
        return {'timestamp': self.timestamp, 'available': dict(self.available)}

    @classmethod
    def from_dict(cls, data: dict) -> 'CapacitySample':
        return cls(
            timestamp=int(data['timestamp']),
            available={str(kind): float(amount) for kind, amount in data['available'].items()}
        )


class HistoryLog:
    """Bounded admission log plus capacity samples, owned by one node.

    Both sequences keep at most `window` entries; the oldest are evicted.
    """

    def __init__(self, window: int = DEFAULT_WINDOW):
        """Initialize an empty log.

        Args:
            window: Maximum number of records and of samples kept
        """
        if window <= 0:
            raise ContractViolationError("history_window", window, "[1, +inf)")
        self.logger = setup_logger(self.__class__.__name__)
        self.window = window
        self.records: Deque[AdmissionRecord] = deque(maxlen=window)
        self.samples: Deque[CapacitySample] = deque(maxlen=window)

    def __len__(self):
        return len(self.records)

    def record_admission(self, record: AdmissionRecord) -> None:
        """Append a record.

        Raises:
            ContractViolationError: If the timestamp does not strictly increase
        """
        if self.records and record.timestamp <= self.records[-1].timestamp:
            raise ContractViolationError("timestamp", record.timestamp,
                                         f"({self.records[-1].timestamp}, +inf)")
        self.records.append(record)

    def record_sample(self, sample: CapacitySample) -> None:
        """Append a capacity sample.

        Raises:
            ContractViolationError: If the timestamp does not strictly increase
        """
        if self.samples and sample.timestamp <= self.samples[-1].timestamp:
            raise ContractViolationError("timestamp", sample.timestamp,
                                         f"({self.samples[-1].timestamp}, +inf)")
        self.samples.append(sample)

    def next_tick(self) -> int:
        """Timestamp following the newest record."""
        return self.records[-1].timestamp + 1 if self.records else 0

    def save_ndjson(self, file_path) -> None:
        """Write the admission records, then the capacity samples, as newline-delimited JSON."""
        with open(file_path, 'w', newline='\n') as f:
            for record in self.records:
                f.write(json.dumps(record.to_dict()) + "\n")
            for sample in self.samples:
                f.write(json.dumps(sample.to_dict()) + "\n")
        self.logger.info(f"Saved {len(self.records)} admission records and {len(self.samples)} "
                         f"capacity samples to {file_path}")

    @classmethod
    def load_ndjson(cls, file_path, window: int = DEFAULT_WINDOW) -> 'HistoryLog':
        """Replay admission records and capacity samples from a newline-delimited JSON file.

        A line carrying an 'available' object is a capacity sample; any other
        line is an admission record.

        Raises:
            FileNotFoundError: If file doesn't exist
            ConfigValidationError: If a line is not a valid record
        """
        if not os.path.exists(file_path):
            raise FileNotFoundError(f"History file not found: {file_path}")
        log = cls(window=window)
        with open(file_path, 'r') as f:
            for line_number, line in enumerate(f, start=1):
                if not line.strip():
                    continue
                try:
                    data = json.loads(line)
                    if isinstance(data, dict) and 'available' in data:
                        log.record_sample(CapacitySample.from_dict(data))
                    else:
                        log.record_admission(AdmissionRecord.from_dict(data))
                except (json.JSONDecodeError, KeyError, TypeError, ValueError, AttributeError) as e:
                    log.logger.error(f"Bad history record at {file_path}:{line_number}: {str(e)}")
                    raise ConfigValidationError(f"{file_path}:{line_number}: {str(e)}")
        return log


def record_admission(record: AdmissionRecord, log: HistoryLog) -> None:
    """Append a record to a node's log (see HistoryLog.record_admission)."""
    log.record_admission(record)

