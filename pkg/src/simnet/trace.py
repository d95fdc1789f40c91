"""Negotiation trace: the ordered events of one simulated negotiation."""
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

STAGES = ('a', 'b', 'c', 'd', 'e')


@dataclass(frozen=True)
class TraceEvent:
    """One step of the chronology at one node.

    Stages: a receive, b self-assess, c query neighbors, d collect
    suitabilities, e sort and forward.
    """
    stage: str
    node: str
    payload: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {'stage': self.stage, 'node': self.node, 'payload': self.payload}


@dataclass
class NegotiationTrace:
    """Events, resulting path and per-hop breakdowns of a negotiation."""
    request_id: str = ""
    events: List[TraceEvent] = field(default_factory=list)
    path: List[str] = field(default_factory=list)
    breakdowns: Dict[str, dict] = field(default_factory=dict)
    outcome: Optional[str] = None

    @property
    def cancelled(self) -> bool:
        return self.outcome == "cancelled"

    @property
    def delivered(self) -> bool:
        return self.outcome == "delivered"

    def extend(self, events: List[TraceEvent]) -> None:
        self.events.extend(events)

    def to_dict(self) -> dict:
        return {
            'request_id': self.request_id,
            'outcome': self.outcome,
            'path': list(self.path),
            'breakdowns': self.breakdowns,
            'events': [event.to_dict() for event in self.events]
        }

    def to_ndjson(self) -> str:
        """One JSON object per event, keys sorted, '\\n' line endings."""
        return "".join(json.dumps(event.to_dict(), sort_keys=True) + "\n" for event in self.events)
