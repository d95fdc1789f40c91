"""Tests for the resource registry, node model and built-in kinds."""
import pytest

from src.core.errors import (
    ConfigValidationError,
    ContractViolationError,
    ResourceConflictError,
    UnknownResourceTypeError,
)
from src.core.models import AdmissionRequest, Requirement
from src.resources import (
    CPU_CORES,
    CPU_DESCRIPTOR,
    MEM_BYTES,
    NET_BANDWIDTH,
    NodeState,
    ResourceRegistry,
    ResourceTypeDescriptor,
    bandwidth_capability,
    bare_metal_bandwidth,
    cpu_capability,
    linear_capability,
    load_node,
)
from src.tsn import TSN_TAS

from tests.helpers import FIXTURES


def test_default_registry_kinds(registry):
    assert registry.kinds() == sorted([CPU_CORES, MEM_BYTES, NET_BANDWIDTH, TSN_TAS])
    assert CPU_CORES in registry
    assert list(registry) == registry.kinds()


def test_duplicate_registration(registry):
    with pytest.raises(ResourceConflictError):
        registry.register(CPU_DESCRIPTOR)


def test_unknown_kind(registry):
    with pytest.raises(UnknownResourceTypeError) as excinfo:
        registry.get("gpu.count")
    assert excinfo.value.kind == "gpu.count"
    assert "gpu.count" in str(excinfo.value)


def test_unused_params_are_rejected(registry):
    with pytest.raises(ContractViolationError):
        registry.validate_requirement(Requirement(CPU_CORES, 1, params={'class_id': 'tc5'}))
    assert registry.validate_requirement(Requirement(TSN_TAS, 1000, params={'class_id': 'tc5'})).kind == TSN_TAS


def test_new_kinds_plug_in_without_engine_changes():
    registry = ResourceRegistry()
    registry.register(ResourceTypeDescriptor(
        kind="gpu.count",
        bare_metal_check=lambda req, node: int(req.amount <= node.total("gpu.count")),
        capability_grade=lambda req, node: linear_capability(req.amount, node.available("gpu.count"))
    ))
    node = NodeState(node_id="gpu-box", totals={"gpu.count": 4})
    request = AdmissionRequest((Requirement("gpu.count", 1),), priority=0)
    descriptors = registry.validate_request(request)
    assert descriptors[0].capability_grade(request.requirements[0], node) == 0.75


class TestLinearCapability:

    def test_requesting_everything_grades_zero(self):
        assert linear_capability(8, 8) == 0.0
        assert linear_capability(9, 8) == 0.0

    def test_linear_in_request(self):
        assert linear_capability(0, 8) == 1.0
        assert linear_capability(2, 8) == 0.75
        assert linear_capability("0.5", 2) == 0.75

    def test_uses_currently_available_amount(self):
        node = NodeState(node_id="busy", totals={CPU_CORES: 8}, in_use={CPU_CORES: 4})
        assert cpu_capability(2, node) == 0.5
        assert node.available(CPU_CORES) == 4


class TestBandwidth:

    def test_falls_back_to_fastest_interface(self):
        node = NodeState.from_dict({
            'node_id': 'sw', 'interfaces': [
                {'interface_id': 'eth0', 'bandwidth_bps': 100000000},
                {'interface_id': 'eth1', 'bandwidth_bps': 1000000000},
            ]
        })
        assert bare_metal_bandwidth(10 ** 9, node) == 1
        assert bare_metal_bandwidth(10 ** 9 + 1, node) == 0
        assert bandwidth_capability(2.5 * 10 ** 8, node) == 0.75

    def test_declared_total_wins(self):
        node = NodeState(node_id="sw", totals={NET_BANDWIDTH: 400}, in_use={NET_BANDWIDTH: 200})
        assert bandwidth_capability(100, node) == 0.5


class TestNodeState:

    def test_usage_cannot_exceed_totals(self):
        with pytest.raises(ContractViolationError):
            NodeState(node_id="n", totals={CPU_CORES: 4}, in_use={CPU_CORES: 5})
        with pytest.raises(ContractViolationError):
            NodeState(node_id="n", totals={CPU_CORES: -1})

    def test_load_fixture_with_tas_interface(self):
        node = load_node(FIXTURES / 'node_tsn.json')
        assert node.node_id == "bridge-1"
        assert node.available(CPU_CORES) == 3
        eth0 = node.interface("eth0")
        assert eth0.tas is not None
        assert [c.class_id for c in eth0.tas.classes] == ["tc5", "tc6"]
        assert node.interface("eth9") is None

    def test_document_round_trip(self):
        node = load_node(FIXTURES / 'node_8core_32gb.json')
        assert NodeState.from_dict(node.to_dict()).to_dict() == node.to_dict()

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_node(tmp_path / 'absent.json')

    def test_invalid_documents(self, tmp_path):
        path = tmp_path / 'broken.json'
        path.write_text("{not json")
        with pytest.raises(ConfigValidationError):
            load_node(path)
        with pytest.raises(ConfigValidationError):
            NodeState.from_dict({'totals': {}})
