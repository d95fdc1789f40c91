"""Built-in resource kinds: CPU cores, memory bytes, bandwidth."""
from fractions import Fraction

from src.core.models import Requirement, as_rational

from .node import NodeState
from .registry import ResourceRegistry, ResourceTypeDescriptor

CPU_CORES = "cpu.cores"
MEM_BYTES = "mem.bytes"
NET_BANDWIDTH = "net.bandwidth_bps"


def linear_capability(requested, available) -> float:
    """1 - requested/available, with a zero guard at requested >= available.

    Requesting everything that is left grades 0, so a node never bids on
    full utilization.
    """
    requested = as_rational(requested, "requested")
    available = as_rational(available, "available")
    if requested >= available:
        return 0.0
    return float(1 - requested / available)


def fits_total(requested, total) -> int:
    """1 iff 0 <= requested <= total."""
    requested = as_rational(requested, "requested")
    return int(0 <= requested <= total)


def bare_metal_cpu(requested_cores, node: NodeState) -> int:
    """0 when more cores than the node has in total (or a negative count) are requested."""
    return fits_total(requested_cores, node.total(CPU_CORES))


def cpu_capability(requested_cores, node: NodeState) -> float:
    """Grade a core demand against the currently available cores."""
    return linear_capability(requested_cores, node.available(CPU_CORES))


def bare_metal_memory(requested_bytes, node: NodeState) -> int:
    """0 when the node cannot physically hold the requested memory."""
    return fits_total(requested_bytes, node.total(MEM_BYTES))


def memory_capability(requested_bytes, node: NodeState) -> float:
    """Grade a memory demand against the currently available memory."""
    return linear_capability(requested_bytes, node.available(MEM_BYTES))


def total_bandwidth(node: NodeState) -> Fraction:
    """Declared bandwidth total, else the fastest interface."""
    if NET_BANDWIDTH in node.totals:
        return node.total(NET_BANDWIDTH)
    return max((iface.bandwidth_bps for iface in node.interfaces), default=Fraction(0))


def bare_metal_bandwidth(requested_bps, node: NodeState) -> int:
    return fits_total(requested_bps, total_bandwidth(node))


def bandwidth_capability(requested_bps, node: NodeState) -> float:
    available = total_bandwidth(node) - node.in_use.get(NET_BANDWIDTH, Fraction(0))
    return linear_capability(requested_bps, available)


def _on_amount(function):
    def grade(requirement: Requirement, node: NodeState):
        return function(requirement.amount, node)
    grade.__name__ = function.__name__
    grade.__doc__ = function.__doc__
    return grade


CPU_DESCRIPTOR = ResourceTypeDescriptor(
    kind=CPU_CORES,
    bare_metal_check=_on_amount(bare_metal_cpu),
    capability_grade=_on_amount(cpu_capability),
    description="CPU cores"
)

MEMORY_DESCRIPTOR = ResourceTypeDescriptor(
    kind=MEM_BYTES,
    bare_metal_check=_on_amount(bare_metal_memory),
    capability_grade=_on_amount(memory_capability),
    description="Memory in bytes"
)

BANDWIDTH_DESCRIPTOR = ResourceTypeDescriptor(
    kind=NET_BANDWIDTH,
    bare_metal_check=_on_amount(bare_metal_bandwidth),
    capability_grade=_on_amount(bandwidth_capability),
    description="Network bandwidth in bits/s"
)


def default_registry() -> ResourceRegistry:
    """Registry with every built-in kind, the TAS kind included."""
    # Imported here: the TAS assessor itself imports this package
    from src.tsn.assessor import TAS_DESCRIPTOR

    registry = ResourceRegistry()
    for descriptor in (CPU_DESCRIPTOR, MEMORY_DESCRIPTOR, BANDWIDTH_DESCRIPTOR, TAS_DESCRIPTOR):
        registry.register(descriptor)
    return registry
