"""Per-node admission history and the metrics feeding the history criterion."""
from .log import AdmissionRecord, CapacitySample, HistoryLog, record_admission
from .metrics import HistoryMetrics, capacity_stability, compute_metrics

__all__ = [
    'AdmissionRecord', 'CapacitySample', 'HistoryLog', 'record_admission',
    'HistoryMetrics', 'capacity_stability', 'compute_metrics'
]
