"""Shared fixtures."""
import pytest

from src.core.config import EngineConfig
from src.resources import CPU_CORES, MEM_BYTES, NodeState, default_registry

from tests.helpers import GB


@pytest.fixture
def config():
    return EngineConfig()


@pytest.fixture
def registry():
    return default_registry()


@pytest.fixture
def node_8core(config):
    return NodeState(node_id="edge-8c", totals={CPU_CORES: 8}, config=config)


@pytest.fixture
def node_8core_32gb(config):
    return NodeState(node_id="edge-8c-32gb", totals={CPU_CORES: 8, MEM_BYTES: 32 * GB}, config=config)
