"""The tsn.tas resource kind, plugged into the resource registry."""
from src.core.errors import ContractViolationError, ScheduleLookupError
from src.core.models import Requirement
from src.resources.registry import ResourceTypeDescriptor

from .schedule import ServiceFlow
from .shaper import per_class_grades, tas_bare_metal

TSN_TAS = "tsn.tas"


def _shaper_interface(requirement: Requirement, node):
    interface_id = requirement.params.get('interface_id')
    for iface in node.interfaces:
        if iface.tas is None:
            continue
        if interface_id is None or iface.interface_id == str(interface_id):
            return iface
    return None


def tas_requirement_bare_metal(requirement: Requirement, node) -> int:
    """1 iff the node runs a TAS schedule that can take the requirement.

    A pinned interface_id must carry a schedule and a pinned class_id must
    exist on it; a node missing either can never host the flow.
    """
    if not tas_bare_metal(node):
        return 0
    iface = _shaper_interface(requirement, node)
    if iface is None:
        return 0
    class_id = requirement.params.get('class_id')
    if class_id is not None and all(c.class_id != str(class_id) for c in iface.tas.classes):
        return 0
    return 1


def tas_requirement_grade(requirement: Requirement, node) -> float:
    """Grade a TAS requirement whose amount is the message size in bits.

    params: guard_fraction (defaults to the node's config), class_id (the
    best class is used when absent), interface_id (first TAS interface when
    absent).

    Raises:
        ScheduleLookupError: If the pinned interface or class is missing,
            which the bare-metal check rules out beforehand
    """
    if requirement.amount <= 0:
        raise ContractViolationError(f"{TSN_TAS}.amount", float(requirement.amount), "(0, +inf) bits")
    iface = _shaper_interface(requirement, node)
    if iface is None:
        raise ScheduleLookupError(
            f"Node {node.node_id} has no TAS interface {requirement.params.get('interface_id')!r}"
        )
    flow = ServiceFlow(
        data_size=requirement.amount,
        guard_fraction=requirement.params.get('guard_fraction', node.config.guard_fraction)
    )
    grades = per_class_grades(flow, iface.tas)
    if not grades:
        return 0.0
    class_id = requirement.params.get('class_id')
    if class_id is None:
        return max(grades.values())
    if str(class_id) not in grades:
        raise ScheduleLookupError(f"Interface {iface.interface_id} has no traffic class {class_id!r}")
    return grades[str(class_id)]


TAS_DESCRIPTOR = ResourceTypeDescriptor(
    kind=TSN_TAS,
    bare_metal_check=tas_requirement_bare_metal,
    capability_grade=tas_requirement_grade,
    accepted_params=frozenset({'guard_fraction', 'class_id', 'interface_id'}),
    description="Time-aware shaper gate time"
)
