"""Historical-performance metrics derived from a node's log."""
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

import numpy as np

from src.core.errors import ContractViolationError
from src.core.models import AdmissionRequest

from .log import AdmissionRecord, CapacitySample


@dataclass(frozen=True)
class HistoryMetrics:
    """The four history ratios, each in [0, 1].

    rh1: similarity of the request's size to the average requested size
    rh2: share of granted reservations left unused
    rh3: stability of available capacity
    rh4: share of strict reservations among grants
    """
    rh1: float = 0.0
    rh2: float = 0.0
    rh3: float = 0.0
    rh4: float = 0.0

    def __post_init__(self):
        for name in ('rh1', 'rh2', 'rh3', 'rh4'):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ContractViolationError(name, value, "[0, 1]")

    def as_tuple(self):
        return (self.rh1, self.rh2, self.rh3, self.rh4)


def compute_metrics(records: Iterable[AdmissionRecord], samples: Iterable[CapacitySample],
                    current_request: AdmissionRequest,
                    totals: Optional[Mapping[str, object]] = None) -> HistoryMetrics:
    """Derive rh1..rh4 for the request being assessed.

    An empty admission log yields all zeros: a fresh node has no history.

    Args:
        records: Admission log, oldest first
        samples: Capacity samples, oldest first
        current_request: Request under assessment
        totals: Node totals used to turn available amounts into fractions

    Returns:
        HistoryMetrics
    """
    records = list(records)
    if not records:
        return HistoryMetrics()

    n = len(current_request.requirements)
    mean_count = float(np.mean([record.requirement_count for record in records]))
    rh1 = min(n, mean_count) / max(n, mean_count)

    granted = [record for record in records if record.granted]
    if granted:
        rh2 = float(np.mean([1.0 - record.used_fraction for record in granted]))
        rh4 = sum(1 for record in granted if record.strict_reservation) / len(granted)
    else:
        rh2 = 0.0
        rh4 = 0.0

    rh3 = capacity_stability(list(samples), totals)
    return HistoryMetrics(rh1=float(rh1), rh2=_unit(rh2), rh3=rh3, rh4=float(rh4))


def capacity_stability(samples, totals=None) -> float:
    """1 - coefficient of variation of the mean available fraction, clamped.

    Each sample is reduced to the mean over kinds of available/total (or
    available/max observed when the total is unknown).
    """
    if not samples:
        return 0.0
    kinds = sorted({kind for sample in samples for kind in sample.available})
    scales = {}
    for kind in kinds:
        total = float(totals[kind]) if totals and kind in totals else 0.0
        if total <= 0:
            total = max(float(sample.available.get(kind, 0.0)) for sample in samples)
        if total > 0:
            scales[kind] = total
    if not scales:
        return 0.0

    levels = np.array([
        np.mean([float(sample.available.get(kind, 0.0)) / scale for kind, scale in scales.items()])
        for sample in samples
    ])
    mean = levels.mean()
    if mean <= 0:
        return 0.0
    return _unit(1.0 - levels.std() / mean)


def _unit(value: float) -> float:
    return float(np.clip(value, 0.0, 1.0))
