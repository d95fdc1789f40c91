"""Worked TAS grading example with its acceptance checks."""
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Tuple

import pandas as pd

from src.core.errors import ConfigValidationError
from src.core.logger import setup_logger
from src.core.models import rational_to_json
from src.tsn.schedule import MS, ServiceFlow, load_schedule
from src.tsn.shaper import needed_time, per_class_grades, transmission_time

from .campaigns import FIXTURES_DIR

logger = setup_logger(__name__)

DEFAULT_SCHEDULE = FIXTURES_DIR / 'tas_example_schedule.json'
DATA_BITS = 5_000_000
GUARD_FRACTION = Fraction(1, 10)

EXPECTED_T_TX = 5 * MS
EXPECTED_T_NEEDED = Fraction(11, 2) * MS
EXPECTED_T_FREE = (13 * MS, Fraction(22, 5) * MS)
EXPECTED_GRADES = (0.711, 0.125)
GRADE_TOLERANCES = (1e-3, 1e-12)


@dataclass(frozen=True)
class Check:
    """One compared quantity of the example."""
    quantity: str
    value: float
    expected: float
    tolerance: float
    passed: bool


@dataclass
class TasExampleReport:
    """Computed times (seconds) and grades of the example, plus their checks."""
    t_tx: Fraction
    t_needed: Fraction
    t_free: Tuple[Fraction, Fraction]
    grades: Tuple[float, float]
    class_ids: Tuple[str, str]
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_frame(self) -> pd.DataFrame:
        """One row per check: quantity, value, expected, tolerance, passed."""
        return pd.DataFrame([asdict(check) for check in self.checks],
                            columns=['quantity', 'value', 'expected', 'tolerance', 'passed'])

    def to_dict(self) -> dict:
        return {
            't_tx_ms': rational_to_json(self.t_tx / MS),
            't_needed_ms': rational_to_json(self.t_needed / MS),
            't_free_ms': [rational_to_json(t / MS) for t in self.t_free],
            'grades': list(self.grades),
            'class_ids': list(self.class_ids),
            'passed': self.passed
        }


def run_tas_example(schedule_path: Optional[str] = None) -> TasExampleReport:
    """Grade the example 5 Mbit flow on both classes of the fixture schedule.

    Times must match exactly; grades within their tolerances.

    Raises:
        ConfigValidationError: If the schedule fixture is missing or has
            fewer than two classes
    """
    path = Path(schedule_path) if schedule_path else DEFAULT_SCHEDULE
    try:
        schedule = load_schedule(path)
    except FileNotFoundError as e:
        logger.error(str(e))
        raise ConfigValidationError(f"TAS example fixture missing: {path}")
    if len(schedule.classes) < 2:
        raise ConfigValidationError(f"TAS example schedule {path} needs two traffic classes")

    first, second = schedule.classes[0], schedule.classes[1]
    flow = ServiceFlow(data_size=DATA_BITS, guard_fraction=GUARD_FRACTION)
    t_tx = transmission_time(flow.data_size, schedule.bandwidth_bps)
    t_needed = needed_time(t_tx, flow.guard_fraction)
    grades = per_class_grades(flow, schedule)

    report = TasExampleReport(
        t_tx=t_tx,
        t_needed=t_needed,
        t_free=(first.free_time(), second.free_time()),
        grades=(grades[first.class_id], grades[second.class_id]),
        class_ids=(first.class_id, second.class_id)
    )
    exact = [
        ('t_tx_ms', t_tx, EXPECTED_T_TX),
        ('t_needed_ms', t_needed, EXPECTED_T_NEEDED),
        (f't_free_ms[{first.class_id}]', report.t_free[0], EXPECTED_T_FREE[0]),
        (f't_free_ms[{second.class_id}]', report.t_free[1], EXPECTED_T_FREE[1]),
    ]
    for quantity, value, expected in exact:
        report.checks.append(Check(quantity, float(value / MS), float(expected / MS), 0.0, value == expected))
    for class_id, grade, expected, tolerance in zip(report.class_ids, report.grades,
                                                     EXPECTED_GRADES, GRADE_TOLERANCES):
        report.checks.append(Check(f'grade[{class_id}]', grade, expected, tolerance,
                                   abs(grade - expected) <= tolerance))

    for check in report.checks:
        if not check.passed:
            logger.error(f"TAS example check failed: {check.quantity}={check.value!r}, "
                         f"expected {check.expected!r} +/- {check.tolerance}")
    return report
