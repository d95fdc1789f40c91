"""Simulated network topology: nodes, links and paths toward listeners."""
import heapq
import json
import os
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from src.core.config import EngineConfig
from src.core.errors import ConfigValidationError, ContractViolationError
from src.core.logger import setup_logger
from src.criteria.proximity import ProximitySample
from src.resources.node import NodeState

logger = setup_logger(__name__)


@dataclass(frozen=True)
class Link:
    """Conditions of one undirected edge. rtt and pdv in seconds."""
    hops: int = 1
    rtt: float = 0.0
    loss: float = 0.0
    pdv: float = 0.0

    def __post_init__(self):
        for name in ('hops', 'rtt', 'loss', 'pdv'):
            if getattr(self, name) < 0:
                raise ContractViolationError(f"link.{name}", getattr(self, name), "[0, +inf)")
        if self.loss > 1:
            raise ContractViolationError("link.loss", self.loss, "[0, 1]")


class Topology:
    """Nodes plus symmetric links.

    Paths are fewest-hop, ties broken by total RTT and then by the node-id
    sequence, so every query has exactly one answer.
    """

    def __init__(self, nodes: Iterable[NodeState] = ()):
        """Initialize a topology.

        Args:
            nodes: Initial node states
        """
        self.nodes: Dict[str, NodeState] = {}
        self.adjacency: Dict[str, Dict[str, Link]] = {}
        for node in nodes:
            self.add_node(node)

    def add_node(self, node: NodeState) -> None:
        if node.node_id in self.nodes:
            raise ConfigValidationError(f"Duplicate node id: {node.node_id}")
        self.nodes[node.node_id] = node
        self.adjacency[node.node_id] = {}

    def add_link(self, a: str, b: str, link: Optional[Link] = None) -> None:
        """Connect two nodes in both directions."""
        for node_id in (a, b):
            if node_id not in self.nodes:
                raise ConfigValidationError(f"Link references unknown node: {node_id}")
        if a == b:
            raise ConfigValidationError(f"Self-loop on node {a}")
        link = link or Link()
        self.adjacency[a][b] = link
        self.adjacency[b][a] = link

    def neighbors(self, node_id: str) -> List[str]:
        return sorted(self.adjacency[node_id])

    def path(self, source: str, target: str, exclude: Iterable[str] = ()) -> Optional[List[str]]:
        """Best path from source to target avoiding excluded nodes, or None."""
        excluded = set(exclude) - {source}
        if target in excluded:
            return None
        queue: List[Tuple[int, float, Tuple[str, ...]]] = [(0, 0.0, (source,))]
        settled = set()
        while queue:
            hops, rtt, route = heapq.heappop(queue)
            node_id = route[-1]
            if node_id == target:
                return list(route)
            if node_id in settled:
                continue
            settled.add(node_id)
            for neighbor, link in self.adjacency[node_id].items():
                if neighbor in settled or neighbor in excluded:
                    continue
                heapq.heappush(queue, (hops + link.hops, rtt + link.rtt, route + (neighbor,)))
        return None

    def has_path(self, source: str, target: str, exclude: Iterable[str] = ()) -> bool:
        return self.path(source, target, exclude) is not None

    def proximity_toward(self, node_id: str, listener: str) -> ProximitySample:
        """Aggregate link conditions along the path to the listener.

        Hops, RTT and PDV add up; loss composes as 1 - prod(1 - loss).
        An unreachable listener yields the worst sample the links allow.
        """
        route = self.path(node_id, listener)
        if route is None:
            return ProximitySample(hops=len(self.nodes), rtt=float('inf'), loss=1.0,
                                   pdv=float('inf'), toward=listener)
        hops, rtt, pdv, delivered = 0, 0.0, 0.0, 1.0
        for a, b in zip(route, route[1:]):
            link = self.adjacency[a][b]
            hops += link.hops
            rtt += link.rtt
            pdv += link.pdv
            delivered *= 1.0 - link.loss
        return ProximitySample(hops=hops, rtt=rtt, loss=1.0 - delivered, pdv=pdv, toward=listener)

    @classmethod
    def from_dict(cls, data: dict, config: Optional[EngineConfig] = None) -> 'Topology':
        """Create from a topology document.

        Args:
            data: {nodes: [node documents], edges: [{a, b, hops, rtt_ms, loss, pdv_ms}]}
            config: Engine configuration shared by every node; a node's own
                'config' object overrides individual keys
        """
        if not isinstance(data, dict):
            raise ConfigValidationError("Topology must be a JSON object")
        base = config if config is not None else EngineConfig()
        topology = cls()
        for item in data.get('nodes') or []:
            node_config = base.replace(**item['config']) if item.get('config') else base
            topology.add_node(NodeState.from_dict(item, node_config))
        for edge in data.get('edges') or []:
            try:
                link = Link(hops=int(edge.get('hops', 1)),
                            rtt=float(edge.get('rtt_ms', 0.0)) / 1000,
                            loss=float(edge.get('loss', 0.0)),
                            pdv=float(edge.get('pdv_ms', 0.0)) / 1000)
                topology.add_link(str(edge['a']), str(edge['b']), link)
            except KeyError as e:
                raise ConfigValidationError(f"Edge {edge!r} is missing {e}")
        return topology


def load_topology(file_path, config: Optional[EngineConfig] = None) -> Topology:
    """Load a topology JSON file.

    Raises:
        FileNotFoundError: If file doesn't exist
        ConfigValidationError: If the document is invalid
    """
    if not os.path.exists(file_path):
        raise FileNotFoundError(f"Topology file not found: {file_path}")
    try:
        with open(file_path, 'r') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        logger.error(f"Failed to parse topology {file_path}: {str(e)}")
        raise ConfigValidationError(f"Invalid JSON in {file_path}: {str(e)}")
    topology = Topology.from_dict(data, config)
    logger.info(f"Loaded topology with {len(topology.nodes)} nodes from {file_path}")
    return topology
