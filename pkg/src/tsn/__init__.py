"""Time-aware shaper schedule model and requirement assessor."""
from .schedule import FlowEntry, ServiceFlow, TasSchedule, TrafficClass, load_schedule
from .shaper import (
    admit_flow,
    best_class,
    effort_grade,
    free_time,
    needed_time,
    per_class_grades,
    tas_bare_metal,
    tas_capability,
    transmission_time,
)
from .assessor import TAS_DESCRIPTOR, TSN_TAS, tas_requirement_bare_metal, tas_requirement_grade

__all__ = [
    'FlowEntry', 'ServiceFlow', 'TasSchedule', 'TrafficClass', 'load_schedule',
    'admit_flow', 'best_class', 'effort_grade', 'free_time', 'needed_time',
    'per_class_grades', 'tas_bare_metal', 'tas_capability', 'transmission_time',
    'TAS_DESCRIPTOR', 'TSN_TAS', 'tas_requirement_bare_metal', 'tas_requirement_grade'
]
