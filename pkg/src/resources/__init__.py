"""Extensible resource registry and node capacity model."""
from .registry import ResourceRegistry, ResourceTypeDescriptor
from .node import NetworkInterface, NodeState, load_node
from .builtin import (
    BANDWIDTH_DESCRIPTOR,
    CPU_CORES,
    CPU_DESCRIPTOR,
    MEM_BYTES,
    MEMORY_DESCRIPTOR,
    NET_BANDWIDTH,
    bandwidth_capability,
    bare_metal_bandwidth,
    bare_metal_cpu,
    bare_metal_memory,
    cpu_capability,
    default_registry,
    linear_capability,
    memory_capability,
    total_bandwidth,
)

__all__ = [
    'ResourceRegistry', 'ResourceTypeDescriptor', 'NetworkInterface', 'NodeState', 'load_node',
    'BANDWIDTH_DESCRIPTOR', 'CPU_CORES', 'CPU_DESCRIPTOR', 'MEM_BYTES', 'MEMORY_DESCRIPTOR',
    'NET_BANDWIDTH', 'bandwidth_capability', 'bare_metal_bandwidth', 'bare_metal_cpu',
    'bare_metal_memory', 'cpu_capability', 'default_registry', 'linear_capability',
    'memory_capability', 'total_bandwidth'
]
