"""Tests for the five assessment criteria."""
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.core.config import EngineConfig, ProximityMaxima
from src.core.errors import ContractViolationError
from src.core.suitability import combine
from src.criteria import (
    HistoryMetrics,
    ProximitySample,
    assess_bare_metal,
    assess_current,
    assess_history,
    assess_proximity,
    draw_salt,
    first_bare_metal_failure,
    grade_priority,
    history_grade,
    proximity_grade,
    requirement_weights,
    salt_rng,
)
from src.history.metrics import compute_metrics
from src.resources import CPU_CORES, MEM_BYTES

from src.core.models import AdmissionRequest, Requirement
from src.managers.assessment_manager import AssessmentManager

from tests.helpers import cpu_mem_request, cpu_request, spy_registry

taus = st.floats(min_value=0.5, max_value=1.0, exclude_min=True, exclude_max=True)
grades = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
positive_grades = st.floats(min_value=1e-6, max_value=1.0, allow_nan=False)


class TestCurrentResources:

    def test_single_requirement_is_its_own_grade(self):
        assert assess_current([0.42], 0.66) == 0.42

    def test_recursion_weights_earlier_requirements(self):
        assert assess_current([1.0, 0.0001], 0.66) > assess_current([0.0001, 1.0], 0.66)
        assert assess_current([0.8, 0.4], 0.75) == pytest.approx(0.75 * 0.8 + 0.25 * 0.4, abs=1e-15)

    def test_three_requirements_nest(self):
        tau = 0.6
        expected = tau * 0.9 + (1 - tau) * (tau * 0.5 + (1 - tau) * 0.2)
        assert assess_current([0.9, 0.5, 0.2], tau) == pytest.approx(expected, abs=1e-15)

    @settings(max_examples=10000, deadline=None)
    @given(grades, taus, st.integers(min_value=1, max_value=10))
    def test_equal_grades_are_a_fixed_point(self, c, tau, length):
        assert assess_current([c] * length, tau) == pytest.approx(c, abs=1e-12)

    @given(st.lists(grades, min_size=1, max_size=10), st.data(), taus)
    def test_any_zero_cancels(self, rhos, data, tau):
        position = data.draw(st.integers(min_value=0, max_value=len(rhos)))
        rhos = rhos[:position] + [0.0] + rhos[position:]
        assert assess_current(rhos, tau) == 0.0

    @given(st.lists(positive_grades, min_size=1, max_size=10), taus)
    def test_result_lies_between_extremes(self, rhos, tau):
        value = assess_current(rhos, tau)
        assert min(rhos) - 1e-12 <= value <= max(rhos) + 1e-12

    @given(st.lists(positive_grades, min_size=2, max_size=6), st.data(), taus)
    def test_monotone_in_each_grade(self, rhos, data, tau):
        index = data.draw(st.integers(min_value=0, max_value=len(rhos) - 1))
        raised = list(rhos)
        raised[index] = min(1.0, raised[index] + 0.1)
        assert assess_current(raised, tau) >= assess_current(rhos, tau) - 1e-12

    def test_high_tau_lets_only_the_first_requirement_count(self):
        sweep = [assess_current([0.6, b], 0.99) for b in np.linspace(0.01, 1.0, 100)]
        assert max(sweep) - min(sweep) <= 0.01

    def test_low_tau_splits_weight_between_two_requirements(self):
        tau = 0.51
        first = (assess_current([1.0, 0.5], tau) - assess_current([0.5, 0.5], tau)) / 0.5
        second = (assess_current([0.5, 1.0], tau) - assess_current([0.5, 0.5], tau)) / 0.5
        assert first == pytest.approx(0.51, abs=1e-12)
        assert second == pytest.approx(0.49, abs=1e-12)

    def test_weights_sum_to_one(self):
        weights = requirement_weights(4, 0.66)
        assert sum(weights) == pytest.approx(1.0, abs=1e-15)
        assert weights[0] == 0.66

    def test_contract(self):
        with pytest.raises(ContractViolationError):
            assess_current([], 0.66)
        with pytest.raises(ContractViolationError):
            assess_current([1.2], 0.66)
        with pytest.raises(ContractViolationError):
            assess_current([0.5], 0.5)


class TestPriority:

    def test_grades(self):
        assert grade_priority(0) == 0.125
        assert grade_priority(6) == 0.875
        assert grade_priority(7) == 1.0
        assert grade_priority(3, p_max=3) == 1.0

    @pytest.mark.parametrize('priority', [-1, 8, 2.5, True])
    def test_out_of_range(self, priority):
        with pytest.raises(ContractViolationError):
            grade_priority(priority)

    @given(st.integers(min_value=0, max_value=6))
    def test_strictly_increasing(self, priority):
        assert 0 < grade_priority(priority) < grade_priority(priority + 1) <= 1


class TestProximity:

    maxima = ProximityMaxima()

    def test_perfect_and_worst_paths(self):
        assert proximity_grade(0, 0.0, 0.0, 0.0, self.maxima) == 1.0
        assert proximity_grade(32, 1.0, 1.0, 0.1, self.maxima) == 0.0
        assert proximity_grade(100, 5.0, 1.0, 3.0, self.maxima) == 0.0

    def test_mean_of_sub_grades(self):
        # 0.5 hops, 0.9 rtt, 0.99 loss, 0.9 pdv
        assert proximity_grade(16, 0.1, 0.01, 0.01, self.maxima) == pytest.approx((0.5 + 0.9 + 0.99 + 0.9) / 4)

    def test_array_input(self):
        grades = proximity_grade(np.array([0, 32]), 0.0, 0.0, 0.0, self.maxima)
        np.testing.assert_allclose(grades, [1.0, 0.75])

    def test_sample_from_milliseconds(self, config):
        sample = ProximitySample.from_dict({'hops': 4, 'rtt_ms': 100, 'loss': 0.0, 'pdv_ms': 10})
        assert sample.rtt == pytest.approx(0.1)
        assert assess_proximity(sample, config) == pytest.approx((0.875 + 0.9 + 1.0 + 0.9) / 4)

    def test_negative_sample_rejected(self):
        with pytest.raises(ContractViolationError):
            ProximitySample(hops=-1)
        with pytest.raises(ContractViolationError):
            ProximitySample(loss=1.5)


class TestHistory:

    @given(st.floats(min_value=0.0, max_value=1.0, exclude_max=True))
    def test_cold_start_is_weighted_salt(self, salt):
        config = EngineConfig()
        metrics = compute_metrics([], [], cpu_request(1))
        assert metrics.as_tuple() == (0.0, 0.0, 0.0, 0.0)
        assert assess_history(metrics, salt, config) == config.salt_weight * salt

    def test_weighted_metrics(self, config):
        metrics = HistoryMetrics(rh1=1.0, rh2=0.5, rh3=0.0, rh4=1.0)
        expected = (1 - config.salt_weight) * 0.625 + config.salt_weight * 0.5
        assert assess_history(metrics, 0.5, config) == pytest.approx(expected, abs=1e-15)

    def test_history_grade_on_arrays(self):
        grades = history_grade(0.0, np.array([0.0, 0.5, 1.0]), 1.0)
        np.testing.assert_array_equal(grades, [0.0, 0.5, 1.0])

    def test_salt_outside_unit_interval(self, config):
        with pytest.raises(ContractViolationError):
            assess_history(HistoryMetrics(), 1.5, config)
        with pytest.raises(ContractViolationError):
            history_grade(0.5, 0.5, 2.0)


class TestBareMetal:

    def test_fits_total(self, node_8core, registry):
        assert assess_bare_metal(cpu_request(8), node_8core, registry) == 1
        assert assess_bare_metal(cpu_request(9), node_8core, registry) == 0

    def test_nothing_graded_past_a_failure(self, node_8core):
        graded = []
        registry = spy_registry(graded, {"acc.fpga": 1, "acc.gpu": 0})
        request = AdmissionRequest((Requirement("acc.fpga", 1), Requirement("acc.gpu", 1)), priority=0)
        breakdown = AssessmentManager(node_8core, registry).assess(request)
        assert breakdown.suitability == 0.0
        assert breakdown.failing_kind == "acc.gpu"
        assert graded == []

    def test_capability_graded_once_per_requirement_when_capable(self, node_8core):
        graded = []
        registry = spy_registry(graded, {"acc.fpga": 1, "acc.gpu": 1})
        request = AdmissionRequest((Requirement("acc.fpga", 1), Requirement("acc.gpu", 1)), priority=0)
        AssessmentManager(node_8core, registry).assess(request)
        assert graded == ["acc.fpga", "acc.gpu"]

    def test_first_failure_in_list_order(self, node_8core_32gb, registry):
        request = cpu_mem_request(9, 40)
        assert first_bare_metal_failure(request, node_8core_32gb, registry) == CPU_CORES
        request = cpu_mem_request(4, 40)
        assert first_bare_metal_failure(request, node_8core_32gb, registry) == MEM_BYTES
        assert first_bare_metal_failure(cpu_mem_request(4, 32), node_8core_32gb, registry) is None


def test_draw_salt_is_seeded_and_in_unit_interval():
    first = [draw_salt(salt_rng(42, 7)) for _ in range(3)]
    assert first == [draw_salt(salt_rng(42, 7)) for _ in range(3)]
    rng = salt_rng(42, 7)
    draws = [draw_salt(rng) for _ in range(1000)]
    assert all(0.0 <= salt < 1.0 for salt in draws)
    assert len(set(draws)) == len(draws)
    assert draw_salt(salt_rng(42, 8)) != draw_salt(salt_rng(42, 7))


@pytest.mark.slow
@pytest.mark.parametrize("theta", [1.0, 1e-2, 1e-10])
def test_salt_moves_suitability_by_at_most_half_its_weight(theta):
    def draws(seed, stream, count=100):
        rng = salt_rng(seed, stream)
        return [draw_salt(rng) for _ in range(count)]

    # 10^4 (seed, stream) pairs, 100 draws each
    salts = np.concatenate([draws(seed, stream) for seed in range(100) for stream in range(100)])
    assert salts.size == 10 ** 6
    assert np.all((salts >= 0.0) & (salts < 1.0))

    rng = salt_rng(2024)
    current, priority, proximity, weighted = (rng.random(salts.size) for _ in range(4))
    priority = np.maximum(priority, 1e-3)
    unsalted = combine(1, current, priority, proximity, history_grade(weighted, 0.0, theta))
    salted = combine(1, current, priority, proximity, history_grade(weighted, salts, theta))
    gap = np.abs(salted - unsalted)
    assert gap.max() <= theta / 2 + 1e-15


def test_seed_pairs_draw_distinct_salts():
    firsts = {draw_salt(salt_rng(seed, stream)) for seed in range(100) for stream in range(100)}
    assert len(firsts) == 10 ** 4
