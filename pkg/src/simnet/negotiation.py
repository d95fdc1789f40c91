"""Deterministic simulation of the hop-by-hop negotiation chronology."""
import hashlib
from typing import Dict, List, Optional, Tuple

import numpy as np

from src.core.errors import ConfigValidationError, LoopDetectedError, RouteExhaustedError
from src.core.logger import setup_logger
from src.core.models import AdmissionRequest
from src.criteria.history import salt_rng
from src.history.log import AdmissionRecord, CapacitySample, HistoryLog
from src.managers.assessment_manager import AssessmentManager
from src.resources.registry import ResourceRegistry

from .topology import Topology
from .trace import NegotiationTrace, TraceEvent


def node_stream(node_id: str) -> int:
    """Stable 64-bit stream key for a node id."""
    return int.from_bytes(hashlib.sha256(node_id.encode('utf-8')).digest()[:8], 'big')


def _next_timestamp(log: HistoryLog) -> int:
    last = [entries[-1].timestamp for entries in (log.records, log.samples) if entries]
    return max(last) + 1 if last else 0


class NegotiationSimulator:
    """Runs negotiations over a topology in a single-threaded event loop.

    Every node draws salt from its own generator, derived from the master
    seed and the node id, so runs under one seed are bit-reproducible.

    Each node that self-assesses a request logs an admission record and a
    capacity sample, so later negotiations on the same simulator see that
    history. The share of a grant the requester actually used is drawn from
    a second per-node stream. reset() restores the logs the nodes started with.
    """

    def __init__(self, topology: Topology, seed: int = 0,
                 registry: Optional[ResourceRegistry] = None,
                 hop_limit: Optional[int] = None):
        """Initialize the simulator.

        Args:
            topology: Network to negotiate over
            seed: Master seed for every node's salt stream
            registry: Resource registry shared by all nodes
            hop_limit: Maximum forwarding steps (the talker's config when None)
        """
        self.logger = setup_logger(self.__class__.__name__)
        self.topology = topology
        self.seed = seed
        self.registry = registry
        self.hop_limit = hop_limit
        self._managers: Dict[str, AssessmentManager] = {}
        self._usage: Dict[str, np.random.Generator] = {}
        self._clock = 0
        self._initial_history = {
            node_id: (list(node.history_log.records), list(node.history_log.samples))
            for node_id, node in topology.nodes.items()
        }
        self.reset()

    def reset(self) -> None:
        """Re-seed every node's streams and restore each history log to its initial state."""
        self._clock = 0
        for node_id, node in self.topology.nodes.items():
            records, samples = self._initial_history.get(node_id, ((), ()))
            node.history_log = HistoryLog(window=node.config.history_window)
            for record in records:
                node.history_log.record_admission(record)
            for sample in samples:
                node.history_log.record_sample(sample)
            self._clock = max(self._clock, _next_timestamp(node.history_log))
        self._usage = {
            node_id: salt_rng(self.seed, node_stream(node_id), 1) for node_id in self.topology.nodes
        }
        self._managers = {
            node_id: AssessmentManager(node, self.registry, salt_rng(self.seed, node_stream(node_id)))
            for node_id, node in self.topology.nodes.items()
        }

    def _assess(self, node_id: str, request: AdmissionRequest):
        proximity = self.topology.proximity_toward(node_id, request.listener)
        return self._managers[node_id].assess(request, proximity)

    def _record(self, node_id: str, request: AdmissionRequest, granted: bool) -> None:
        node = self.topology.nodes[node_id]
        used_fraction = float(self._usage[node_id].random()) if granted else 0.0
        node.history_log.record_admission(AdmissionRecord(
            request_id=request.request_id,
            requirement_count=len(request.requirements),
            granted=granted,
            strict_reservation=request.strict_reservation and granted,
            used_fraction=used_fraction,
            timestamp=self._clock
        ))
        node.history_log.record_sample(CapacitySample(
            timestamp=self._clock,
            available={kind: float(node.available(kind)) for kind in sorted(node.totals)}
        ))
        self._clock += 1

    def _candidates(self, current: str, listener: str, visited) -> List[str]:
        neighbors = [n for n in self.topology.neighbors(current) if n not in visited]
        if listener in neighbors:
            return [listener]
        blocked = set(visited) | {current}
        return [n for n in neighbors if self.topology.has_path(n, listener, exclude=blocked)]

    @staticmethod
    def _choose(current, listener, ranking) -> str:
        if not ranking or ranking[0][1] == 0.0:
            raise RouteExhaustedError(f"No capable neighbor of {current} leads to {listener}")
        return ranking[0][0]

    def step_hop(self, current: str, request: AdmissionRequest,
                 visited=()) -> Tuple[Optional[str], List[TraceEvent], Dict[str, dict]]:
        """Process the request at one node.

        Args:
            current: Node holding the request
            request: Admission request being negotiated
            visited: Nodes already on the path; never candidates

        Returns:
            (next node or None on cancel, events, breakdowns by node id)
        """
        events = [TraceEvent('a', current, {'event': 'receive', 'request_id': request.request_id})]
        breakdowns = {}

        own = self._assess(current, request)
        breakdowns[current] = own.to_dict()
        events.append(TraceEvent('b', current, {'event': 'self_assess', 'suitability': own.suitability}))
        if own.suitability == 0.0:
            self.logger.warning(f"Node {current} cancels {request.request_id}: not capable")
            events.append(TraceEvent('b', current, {'event': 'cancel', 'reason': 'not_capable',
                                                    'failing_kind': own.failing_kind}))
            return None, events, breakdowns

        candidates = self._candidates(current, request.listener, visited)
        events.append(TraceEvent('c', current, {'event': 'query', 'candidates': candidates}))

        collected = []
        for candidate in candidates:
            breakdown = self._assess(candidate, request)
            breakdowns[candidate] = breakdown.to_dict()
            collected.append((candidate, breakdown.suitability))
            events.append(TraceEvent('d', current, {'event': 'collect', 'candidate': candidate,
                                                    'suitability': breakdown.suitability}))

        ranking = sorted(collected, key=lambda item: (-item[1], item[0]))
        try:
            chosen = self._choose(current, request.listener, ranking)
        except RouteExhaustedError as e:
            self.logger.warning(f"Node {current} cancels {request.request_id}: {str(e)}")
            events.append(TraceEvent('e', current, {'event': 'cancel', 'reason': 'route_exhausted',
                                                    'ranking': [list(item) for item in ranking]}))
            return None, events, breakdowns

        events.append(TraceEvent('e', current, {'event': 'forward', 'next': chosen,
                                                'ranking': [list(item) for item in ranking]}))
        self.logger.info(f"Node {current} forwards {request.request_id} to {chosen}")
        return chosen, events, breakdowns

    def run_negotiation(self, request: AdmissionRequest) -> NegotiationTrace:
        """Forward a request hop by hop from talker until listener or cancel.

        Raises:
            ConfigValidationError: If talker or listener is not in the topology
            LoopDetectedError: If the hop limit trips
        """
        for role, node_id in (('talker', request.talker), ('listener', request.listener)):
            if node_id not in self.topology.nodes:
                raise ConfigValidationError(f"Unknown {role} node: {node_id!r}")

        hop_limit = self.hop_limit
        if hop_limit is None:
            hop_limit = self.topology.nodes[request.talker].config.hop_limit

        trace = NegotiationTrace(request_id=request.request_id, path=[request.talker])
        current = request.talker
        hops = 0
        while current != request.listener:
            if hops >= hop_limit:
                raise LoopDetectedError(f"Request {request.request_id} exceeded {hop_limit} hops")
            next_hop, events, breakdowns = self.step_hop(current, request, visited=trace.path)
            trace.extend(events)
            trace.breakdowns.update(breakdowns)
            self._record(current, request, granted=next_hop is not None)
            if next_hop is None:
                trace.outcome = "cancelled"
                return trace
            trace.path.append(next_hop)
            current = next_hop
            hops += 1

        trace.events.append(TraceEvent('a', current, {'event': 'deliver', 'request_id': request.request_id}))
        trace.outcome = "delivered"
        return trace


def run_negotiation(request: AdmissionRequest, topology: Topology, seed: int = 0,
                    registry: Optional[ResourceRegistry] = None) -> NegotiationTrace:
    """Simulate one negotiation (see NegotiationSimulator.run_negotiation)."""
    return NegotiationSimulator(topology, seed, registry).run_negotiation(request)


def step_hop(current: str, request: AdmissionRequest, topology: Topology, seed: int = 0,
             visited=()) -> Tuple[Optional[str], List[TraceEvent]]:
    """Process one hop on a fresh simulator (see NegotiationSimulator.step_hop)."""
    next_hop, events, _ = NegotiationSimulator(topology, seed).step_hop(current, request, visited)
    return next_hop, events
