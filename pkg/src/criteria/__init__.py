"""The five assessment criteria."""
from src.history.metrics import HistoryMetrics

from .bare_metal import assess_bare_metal, first_bare_metal_failure
from .current import assess_current, requirement_weights
from .history import assess_history, draw_salt, history_grade, salt_rng
from .priority import grade_priority
from .proximity import ProximitySample, assess_proximity, proximity_grade

__all__ = [
    'HistoryMetrics', 'ProximitySample',
    'assess_bare_metal', 'first_bare_metal_failure', 'assess_current', 'requirement_weights',
    'assess_history', 'draw_salt', 'history_grade', 'salt_rng', 'grade_priority', 'assess_proximity',
    'proximity_grade'
]
