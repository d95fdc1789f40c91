"""Simulated multi-hop negotiation over a topology."""
from .topology import Link, Topology, load_topology
from .trace import STAGES, NegotiationTrace, TraceEvent
from .negotiation import NegotiationSimulator, node_stream, run_negotiation, step_hop

__all__ = [
    'Link', 'Topology', 'load_topology',
    'STAGES', 'NegotiationTrace', 'TraceEvent',
    'NegotiationSimulator', 'node_stream', 'run_negotiation', 'step_hop',
]
