"""Builders and paths shared by the test modules."""
from pathlib import Path

from src.core.models import AdmissionRequest, Requirement
from src.resources import CPU_CORES, MEM_BYTES, ResourceRegistry, ResourceTypeDescriptor

GB = 10 ** 9
ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "config" / "fixtures"
GOLDEN = Path(__file__).resolve().parent / "golden"


def cpu_request(cores, priority=7, **kwargs):
    return AdmissionRequest((Requirement(CPU_CORES, cores),), priority=priority, **kwargs)


def cpu_mem_request(cores, memory_gb, priority=7, **kwargs):
    requirements = (Requirement(CPU_CORES, cores), Requirement(MEM_BYTES, memory_gb * GB))
    return AdmissionRequest(requirements, priority=priority, **kwargs)


def spy_registry(graded, fits_by_kind):
    """Registry whose kinds pass bare-metal per fits_by_kind and log every capability call."""
    registry = ResourceRegistry()
    for kind, fits in fits_by_kind.items():
        registry.register(ResourceTypeDescriptor(
            kind=kind,
            bare_metal_check=lambda requirement, node, fits=fits: fits,
            capability_grade=lambda requirement, node: graded.append(requirement.kind) or 1.0
        ))
    return registry
