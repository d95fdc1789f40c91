"""Time-aware shaper requirement grading.

A new flow needs t_needed = t_tx * (1 + guard_fraction) of gate time. Given
a class's free time the effort grade is

    x = t_needed / t_free
    0.5 + x / 2                    if t_free >= t_needed   (range (0.5, 1])
    min((x - 1) / 2, 0.5 - ulp)    otherwise               (range [0, 0.5))

so a class that can take the flow always outgrades one that cannot.
"""
from fractions import Fraction
from typing import Dict, Optional

import numpy as np

from src.core.errors import ContractViolationError
from src.core.logger import setup_logger
from src.core.models import as_rational, rational_to_json

from .schedule import FlowEntry, ServiceFlow, TasSchedule, TrafficClass

logger = setup_logger(__name__)

# Largest double strictly below 0.5
INFEASIBLE_CEILING = float(np.nextafter(0.5, 0.0))


def transmission_time(data_size, bandwidth) -> Fraction:
    """Seconds needed to put data_size bits on a link of bandwidth bits/s.

    Raises:
        ContractViolationError: If bandwidth <= 0
    """
    bandwidth = as_rational(bandwidth, "bandwidth")
    if bandwidth <= 0:
        raise ContractViolationError("bandwidth", rational_to_json(bandwidth), "(0, +inf) bit/s")
    return as_rational(data_size, "data_size") / bandwidth


def needed_time(t_tx, guard_fraction) -> Fraction:
    """Transmission time plus its guard: t_tx * (1 + guard_fraction)."""
    t_tx = as_rational(t_tx, "t_tx")
    if t_tx < 0:
        raise ContractViolationError("t_tx", rational_to_json(t_tx), "[0, +inf) s")
    return t_tx * (1 + as_rational(guard_fraction, "guard_fraction"))


def free_time(schedule: TasSchedule, class_id: str) -> Fraction:
    """Gate time of a class not yet taken by admitted flows and their guards.

    Raises:
        ScheduleLookupError: If the class does not exist
    """
    return schedule.traffic_class(class_id).free_time()


def effort_grade(t_needed, t_free) -> float:
    """Normalize t_needed / t_free into the piecewise [0, 1] grade."""
    t_needed = as_rational(t_needed, "t_needed")
    t_free = as_rational(t_free, "t_free")
    if t_free <= 0:
        return 0.0
    x = t_needed / t_free
    if t_free >= t_needed:
        return float(Fraction(1, 2) + x / 2)
    return min(float((x - 1) / 2), INFEASIBLE_CEILING)


def tas_capability(flow: ServiceFlow, traffic_class: TrafficClass, bandwidth) -> float:
    """Grade the effort of fitting a flow into one traffic class.

    Args:
        flow: The service to admit
        traffic_class: Candidate class of the interface's schedule
        bandwidth: Interface bandwidth in bits/s

    Returns:
        float: (0.5, 1] when the class has room, [0, 0.5) when its open time
        would have to grow, 0 when the class is full
    """
    t_tx = transmission_time(flow.data_size, bandwidth)
    t_needed = needed_time(t_tx, flow.guard_fraction)
    grade = effort_grade(t_needed, traffic_class.free_time())
    logger.debug(f"TAS class {traffic_class.class_id}: t_needed={float(t_needed):.6g}s "
                 f"t_free={float(traffic_class.free_time()):.6g}s grade={grade:.6g}")
    return grade


def per_class_grades(flow: ServiceFlow, schedule: TasSchedule) -> Dict[str, float]:
    """Grade every class of a schedule, in cycle order."""
    return {
        traffic_class.class_id: tas_capability(flow, traffic_class, schedule.bandwidth_bps)
        for traffic_class in schedule.classes
    }


def best_class(flow: ServiceFlow, schedule: TasSchedule) -> Optional[str]:
    """Default selector: the highest-graded class, first in cycle order on ties."""
    grades = per_class_grades(flow, schedule)
    if not grades:
        return None
    return max(grades, key=lambda class_id: grades[class_id])


def tas_bare_metal(node) -> int:
    """1 iff the node has at least one interface carrying a TAS schedule."""
    return int(any(iface.tas is not None for iface in node.interfaces))


def admit_flow(schedule: TasSchedule, class_id: str, flow: ServiceFlow,
               label: str = "", extend_open: bool = False) -> Fraction:
    """Book a flow into a class as a transmission entry plus a guard entry.

    Args:
        schedule: Schedule to mutate
        class_id: Target class
        flow: Flow to admit
        label: Line item label; the guard entry gets a '/guard' suffix
        extend_open: Grow t_open by the deficit instead of refusing

    Returns:
        Fraction: The class's free time after admission

    Raises:
        ScheduleLookupError: If the class does not exist
        ContractViolationError: If the class lacks room and extend_open is False
    """
    traffic_class = schedule.traffic_class(class_id)
    t_tx = transmission_time(flow.data_size, schedule.bandwidth_bps)
    t_guard = t_tx * flow.guard_fraction
    deficit = t_tx + t_guard - traffic_class.free_time()
    if deficit > 0:
        if not extend_open:
            raise ContractViolationError(f"{class_id}.t_free", rational_to_json(traffic_class.free_time()),
                                         f"[t_needed={rational_to_json(t_tx + t_guard)}, +inf) s")
        traffic_class.t_open += deficit
        logger.info(f"Extended t_open of class {class_id} by {float(deficit):.6g}s")

    label = label or f"flow-{len(traffic_class.flows)}"
    traffic_class.flows.append(FlowEntry(label=label, t_tx=t_tx))
    if t_guard:
        traffic_class.flows.append(FlowEntry(label=f"{label}/guard", t_tx=t_guard))
    return traffic_class.free_time()
