"""Proximity criterion: network conditions toward the listener."""
from dataclasses import dataclass

import numpy as np

from src.core.errors import ContractViolationError


@dataclass(frozen=True)
class ProximitySample:
    """Measured path conditions from the assessing node to a listener.

    rtt and pdv are in seconds, loss is a fraction.
    """
    hops: int = 0
    rtt: float = 0.0
    loss: float = 0.0
    pdv: float = 0.0
    toward: str = ""

    def __post_init__(self):
        for name in ('hops', 'rtt', 'loss', 'pdv'):
            if getattr(self, name) < 0:
                raise ContractViolationError(name, getattr(self, name), "[0, +inf)")
        if self.loss > 1:
            raise ContractViolationError("loss", self.loss, "[0, 1]")

    def to_dict(self) -> dict:
        return {'hops': self.hops, 'rtt': self.rtt, 'loss': self.loss,
                'pdv': self.pdv, 'toward': self.toward}

    @classmethod
    def from_dict(cls, data: dict) -> 'ProximitySample':
        """Create from dictionary; accepts rtt_ms/pdv_ms in place of seconds."""
        rtt = data['rtt'] if 'rtt' in data else float(data.get('rtt_ms', 0.0)) / 1000
        pdv = data['pdv'] if 'pdv' in data else float(data.get('pdv_ms', 0.0)) / 1000
        return cls(hops=int(data.get('hops', 0)), rtt=float(rtt), loss=float(data.get('loss', 0.0)),
                   pdv=float(pdv), toward=str(data.get('toward', '')))


def proximity_grade(hops, rtt, loss, pdv, maxima):
    """Mean of four clamped linear sub-grades; scalars or numpy arrays.

    f_hops = 1 - hops/hop_max, f_rtt = 1 - rtt/rtt_max, f_loss = 1 - loss,
    f_pdv = 1 - pdv/pdv_max, each clamped to [0, 1].
    """
    sub_grades = (
        np.clip(1.0 - np.asarray(hops, dtype=float) / maxima.hop_max, 0.0, 1.0),
        np.clip(1.0 - np.asarray(rtt, dtype=float) / maxima.rtt_max, 0.0, 1.0),
        np.clip(1.0 - np.asarray(loss, dtype=float), 0.0, 1.0),
        np.clip(1.0 - np.asarray(pdv, dtype=float) / maxima.pdv_max, 0.0, 1.0),
    )
    grade = (sub_grades[0] + sub_grades[1] + sub_grades[2] + sub_grades[3]) / 4
    if np.ndim(grade) == 0:
        return float(grade)
    return grade


def assess_proximity(sample: ProximitySample, config) -> float:
    """Grade a proximity sample with the node's normalizer bounds."""
    return proximity_grade(sample.hops, sample.rtt, sample.loss, sample.pdv, config.proximity_maxima)
