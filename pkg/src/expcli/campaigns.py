"""Validation campaigns: grids of assessments emitted as data frames.

Every grid cell owns a generator derived from the experiment seed and the
cell index, so a campaign's output depends only on its spec. Deterministic
grades (bare-metal, current resources, priority) come from the criterion
functions once per cell; the per-run randomness is drawn as numpy arrays.
"""
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from src.core.config import EngineConfig, ProximityMaxima
from src.core.logger import setup_logger
from src.core.models import AdmissionRequest, Requirement
from src.core.suitability import combine
from src.criteria import (
    HistoryMetrics,
    assess_current,
    assess_history,
    first_bare_metal_failure,
    grade_priority,
    history_grade,
    proximity_grade,
    salt_rng,
)
from src.resources import CPU_CORES, MEM_BYTES, NodeState, ResourceRegistry, default_registry

from .spec import ExperimentSpec

logger = setup_logger(__name__)

GB = 10 ** 9
FIXTURE_CORES = 8
FIXTURE_MEMORY_GB = 32
PHASES = ('a', 'b', 'c', 'd')
ORDERS = ((CPU_CORES, MEM_BYTES), (MEM_BYTES, CPU_CORES))
ORDER_LABELS = {CPU_CORES: 'cpu', MEM_BYTES: 'mem'}
COLD_START = HistoryMetrics()

SINGLE_REQ_COLUMNS = ['requested_cores', 'priority', 'criteria_phase', 'suitability']
MULTI_REQ_COLUMNS = ['order', 'rho_cpu', 'rho_mem', 'priority', 'tau', 'suitability']
SALT_SWEEP_COLUMNS = ['theta', 'min', 'max', 'mean', 'stddev', 'duplicate_rate']

FIXTURES_DIR = Path(__file__).resolve().parents[2] / 'config' / 'fixtures'


def fixture_node(cores: int = FIXTURE_CORES, memory_gb: int = 0,
                 config: Optional[EngineConfig] = None) -> NodeState:
    """An idle node with the given cores and memory."""
    totals = {CPU_CORES: cores}
    if memory_gb:
        totals[MEM_BYTES] = memory_gb * GB
    return NodeState(node_id=f"fixture-{cores}c-{memory_gb}gb", totals=totals,
                     config=config if config is not None else EngineConfig())


def random_proximity(rng: np.random.Generator, size: int, maxima: ProximityMaxima,
                     levels: int = 0) -> np.ndarray:
    """Proximity grades of `size` uniformly randomized path conditions.

    Each condition is drawn over its normalizer's domain (hops and RTT and
    PDV up to their maxima, loss in [0, 1]). With levels >= 2 every draw is
    snapped down to one of `levels` evenly spaced points k/levels.
    """
    units = rng.random((4, size))
    if levels:
        units = np.floor(units * levels) / levels
    hops = units[0] * maxima.hop_max
    rtt = units[1] * maxima.rtt_max
    loss = units[2]
    pdv = units[3] * maxima.pdv_max
    return proximity_grade(hops, rtt, loss, pdv, maxima)


def request_grades(request: AdmissionRequest, node: NodeState, registry: ResourceRegistry,
                   tau: float) -> Tuple[int, float, Dict[str, float]]:
    """Bare-metal grade, current-resources grade and per-kind rho of a request.

    Past a bare-metal failure nothing is graded: the failing kind reports a
    rho of 0 and every other kind NaN, which the CSV leaves empty.
    """
    failing_kind = first_bare_metal_failure(request, node, registry)
    if failing_kind is not None:
        rhos = {kind: float('nan') for kind in request.kinds}
        rhos[failing_kind] = 0.0
        return 0, 0.0, rhos
    rhos = {}
    for requirement in request.requirements:
        descriptor = registry.get(requirement.kind)
        rhos[requirement.kind] = float(descriptor.capability_grade(requirement, node))
    current = assess_current([rhos[kind] for kind in request.kinds], tau)
    return 1, current, rhos


def _full_suitability(rng, runs, bare_metal, current, priority_grade, config, levels=0):
    proximity = random_proximity(rng, runs, config.proximity_maxima, levels)
    history = assess_history(COLD_START, rng.random(runs), config)
    return combine(bare_metal, current, priority_grade, proximity, history)


def iter_single_req(spec: ExperimentSpec, config: Optional[EngineConfig] = None) -> Iterator[pd.DataFrame]:
    """One frame per criteria phase of the single-requirement campaign.

    Phases are cumulative: a bare-metal only, b adds current resources,
    c adds priority, d adds randomized proximity and cold-start history.
    """
    config = config if config is not None else EngineConfig()
    node = fixture_node(FIXTURE_CORES, config=config)
    registry = default_registry()
    runs = spec.runs

    cell = 0
    for phase in PHASES:
        cores_col: List[np.ndarray] = []
        priority_col: List[np.ndarray] = []
        values: List[np.ndarray] = []
        for cores in spec.cores:
            request = AdmissionRequest((Requirement(CPU_CORES, cores),), priority=0)
            bare_metal, current, _ = request_grades(request, node, registry, config.tau)
            for priority in spec.priorities:
                rng = salt_rng(spec.seed, cell)
                cell += 1
                priority_grade = grade_priority(priority, config.p_max)
                if phase == 'a':
                    cell_values = np.full(runs, float(bare_metal))
                elif phase == 'b':
                    cell_values = np.full(runs, bare_metal * current)
                elif phase == 'c':
                    cell_values = np.full(runs, bare_metal * current * priority_grade)
                else:
                    cell_values = _full_suitability(rng, runs, bare_metal, current, priority_grade, config)
                cores_col.append(np.full(runs, cores))
                priority_col.append(np.full(runs, priority))
                values.append(cell_values)
        yield pd.DataFrame({
            'requested_cores': np.concatenate(cores_col),
            'priority': np.concatenate(priority_col),
            'criteria_phase': phase,
            'suitability': np.concatenate(values)
        }, columns=SINGLE_REQ_COLUMNS)


def iter_multi_req(spec: ExperimentSpec, config: Optional[EngineConfig] = None) -> Iterator[pd.DataFrame]:
    """One frame per (requirement order, tau) of the two-requirement campaign."""
    config = config if config is not None else EngineConfig()
    node = fixture_node(FIXTURE_CORES, FIXTURE_MEMORY_GB, config=config)
    registry = default_registry()
    runs = spec.runs

    cell = 0
    for order in ORDERS:
        label = ",".join(ORDER_LABELS[kind] for kind in order)
        for tau in spec.taus:
            columns: Dict[str, List[np.ndarray]] = {name: [] for name in MULTI_REQ_COLUMNS if name != 'order'}
            for cores in spec.cores:
                for memory_gb in spec.memory_gb:
                    amounts = {CPU_CORES: cores, MEM_BYTES: memory_gb * GB}
                    request = AdmissionRequest(
                        tuple(Requirement(kind, amounts[kind]) for kind in order), priority=0
                    )
                    bare_metal, current, rhos = request_grades(request, node, registry, tau)
                    for priority in spec.priorities:
                        rng = salt_rng(spec.seed, cell)
                        cell += 1
                        priority_grade = grade_priority(priority, config.p_max)
                        columns['rho_cpu'].append(np.full(runs, rhos[CPU_CORES]))
                        columns['rho_mem'].append(np.full(runs, rhos[MEM_BYTES]))
                        columns['priority'].append(np.full(runs, priority))
                        columns['tau'].append(np.full(runs, tau))
                        columns['suitability'].append(
                            _full_suitability(rng, runs, bare_metal, current, priority_grade, config)
                        )
            frame = pd.DataFrame({name: np.concatenate(parts) for name, parts in columns.items()})
            frame.insert(0, 'order', label)
            yield frame


def salt_sweep_row(theta: float, rng: np.random.Generator, runs: int, bare_metal: np.ndarray,
                   current: np.ndarray, priority_grade: np.ndarray, maxima: ProximityMaxima,
                   levels: int = 0) -> dict:
    """Statistics of |unsalted - salted| over paired assessments at one salt weight.

    Each pair shares every input except the salt, which is 0 on one side and
    a uniform draw on the other. duplicate_rate is the share of runs in
    which a node and the next node on the path, assessing the same request
    under their own path conditions and salt draws, reach the same value.
    """
    proximity = random_proximity(rng, runs, maxima, levels)
    salt = rng.random(runs)
    unsalted = combine(bare_metal, current, priority_grade, proximity, history_grade(0.0, 0.0, theta))
    salted = combine(bare_metal, current, priority_grade, proximity, history_grade(0.0, salt, theta))
    difference = np.abs(unsalted - salted)

    next_proximity = random_proximity(rng, runs, maxima, levels)
    next_salt = rng.random(runs)
    next_salted = combine(bare_metal, current, priority_grade, next_proximity,
                          history_grade(0.0, next_salt, theta))
    return {
        'theta': theta,
        'min': float(difference.min()),
        'max': float(difference.max()),
        'mean': float(difference.mean()),
        'stddev': float(difference.std()),
        'duplicate_rate': float(np.mean(salted == next_salted))
    }


def run_salt_sweep(spec: ExperimentSpec, config: Optional[EngineConfig] = None) -> pd.DataFrame:
    """One row of difference statistics per salt weight.

    Each run draws cores and priority uniformly from the spec's axes on the
    8-core fixture with cold-start history; proximity is continuous unless
    spec.proximity_levels asks for a grid.
    """
    config = config if config is not None else EngineConfig()
    node = fixture_node(FIXTURE_CORES, config=config)
    registry = default_registry()

    core_grades = []
    for cores in spec.cores:
        request = AdmissionRequest((Requirement(CPU_CORES, cores),), priority=0)
        bare_metal, current, _ = request_grades(request, node, registry, config.tau)
        core_grades.append((bare_metal, current))
    bm_table = np.array([grade[0] for grade in core_grades])
    current_table = np.array([grade[1] for grade in core_grades])
    priority_table = np.array([grade_priority(p, config.p_max) for p in spec.priorities])

    logger.info(f"Salt sweep over {len(spec.thetas)} weights, {spec.runs} pairs each")
    rows = []
    for cell, theta in enumerate(spec.thetas):
        rng = salt_rng(spec.seed, cell)
        core_index = rng.integers(0, len(bm_table), spec.runs)
        priority_index = rng.integers(0, len(priority_table), spec.runs)
        rows.append(salt_sweep_row(theta, rng, spec.runs, bm_table[core_index], current_table[core_index],
                                   priority_table[priority_index], config.proximity_maxima,
                                   spec.proximity_levels))
    return pd.DataFrame(rows, columns=SALT_SWEEP_COLUMNS)


def run_single_req(spec: ExperimentSpec, config: Optional[EngineConfig] = None) -> pd.DataFrame:
    """Rows (requested_cores, priority, criteria_phase, suitability), runs per cell."""
    return _collect(iter_single_req(spec, config), SINGLE_REQ_COLUMNS)


def run_multi_req(spec: ExperimentSpec, config: Optional[EngineConfig] = None) -> pd.DataFrame:
    """Rows (order, rho_cpu, rho_mem, priority, tau, suitability), runs per cell."""
    return _collect(iter_multi_req(spec, config), MULTI_REQ_COLUMNS)


def _collect(frames: Iterator[pd.DataFrame], columns: Sequence[str]) -> pd.DataFrame:
    frames = list(frames)
    if not frames:
        return pd.DataFrame(columns=list(columns))
    return pd.concat(frames, ignore_index=True)
