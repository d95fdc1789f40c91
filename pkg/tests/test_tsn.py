"""Tests for TAS schedule bookkeeping and effort grading."""
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from src.core.errors import ConfigValidationError, ContractViolationError, ScheduleLookupError
from src.core.models import Requirement
from src.resources import load_node
from src.tsn import (
    ServiceFlow,
    TasSchedule,
    TrafficClass,
    admit_flow,
    best_class,
    effort_grade,
    free_time,
    load_schedule,
    needed_time,
    per_class_grades,
    tas_bare_metal,
    transmission_time,
)
from src.tsn.assessor import tas_requirement_bare_metal, tas_requirement_grade
from src.tsn.schedule import MS
from src.tsn.shaper import INFEASIBLE_CEILING

from tests.helpers import FIXTURES

times = st.fractions(min_value=Fraction(1, 10 ** 6), max_value=1)


@pytest.fixture
def schedule():
    return load_schedule(FIXTURES / 'tas_example_schedule.json')


@pytest.fixture
def flow():
    return ServiceFlow(data_size=5_000_000, guard_fraction=Fraction(1, 10))


class TestWorkedExample:

    def test_transmission_and_needed_time(self, schedule, flow):
        t_tx = transmission_time(flow.data_size, schedule.bandwidth_bps)
        assert t_tx == 5 * MS
        assert needed_time(t_tx, flow.guard_fraction) == Fraction(11, 2) * MS

    def test_free_times_are_exact(self, schedule):
        assert free_time(schedule, "tc5") == 13 * MS
        assert free_time(schedule, "tc6") == Fraction(22, 5) * MS

    def test_grades(self, schedule, flow):
        grades = per_class_grades(flow, schedule)
        assert grades["tc5"] == pytest.approx(0.711, abs=1e-3)
        assert grades["tc5"] == pytest.approx(37 / 52, abs=1e-15)
        assert grades["tc6"] == pytest.approx(0.125, abs=1e-12)
        assert best_class(flow, schedule) == "tc5"


class TestEffortGrade:

    @given(times, times)
    def test_feasible_always_outgrades_infeasible(self, t_needed, t_free):
        grade = effort_grade(t_needed, t_free)
        if t_free >= t_needed:
            assert 0.5 < grade <= 1.0
        else:
            assert 0.0 <= grade < 0.5

    def test_exact_fit_grades_one(self):
        assert effort_grade(Fraction(3), Fraction(3)) == 1.0

    def test_infeasible_branch_is_capped_below_half(self):
        assert effort_grade(100, 1) == INFEASIBLE_CEILING
        assert INFEASIBLE_CEILING < 0.5

    def test_full_class_grades_zero(self):
        assert effort_grade(1, 0) == 0.0

    def test_zero_bandwidth_is_a_contract_violation(self):
        with pytest.raises(ContractViolationError):
            transmission_time(1000, 0)


class TestSchedule:

    def test_unknown_class(self, schedule):
        with pytest.raises(ScheduleLookupError):
            schedule.traffic_class("tc9")

    def test_overcommitted_class_is_rejected(self):
        with pytest.raises(ContractViolationError):
            TrafficClass.from_dict({'class_id': 'tc1', 't_open_ms': 1, 'flows': [{'t_tx_ms': 2}]})

    def test_bad_document(self):
        with pytest.raises(ConfigValidationError):
            TasSchedule.from_dict({'interface_id': 'eth0'})

    def test_document_round_trip(self, schedule):
        assert TasSchedule.from_dict(schedule.to_dict()).to_dict() == schedule.to_dict()


class TestAdmitFlow:

    def test_books_transmission_and_guard(self, schedule, flow):
        remaining = admit_flow(schedule, "tc5", flow, label="svc")
        assert remaining == Fraction(15, 2) * MS
        labels = [entry.label for entry in schedule.traffic_class("tc5").flows]
        assert labels[-2:] == ["svc", "svc/guard"]

    def test_refuses_overcommit(self, schedule, flow):
        with pytest.raises(ContractViolationError):
            admit_flow(schedule, "tc6", flow)
        assert free_time(schedule, "tc6") == Fraction(22, 5) * MS

    def test_extends_open_time_on_request(self, schedule, flow):
        remaining = admit_flow(schedule, "tc6", flow, extend_open=True)
        assert remaining == 0
        assert schedule.traffic_class("tc6").t_open == Fraction(311, 10) * MS


class TestRequirementGrade:

    def test_best_class_by_default(self):
        node = load_node(FIXTURES / 'node_tsn.json')
        requirement = Requirement("tsn.tas", 5_000_000, params={'guard_fraction': 0.1})
        assert tas_requirement_grade(requirement, node) == pytest.approx(37 / 52)

    def test_pinned_class(self):
        node = load_node(FIXTURES / 'node_tsn.json')
        requirement = Requirement("tsn.tas", 5_000_000, params={'class_id': 'tc6', 'guard_fraction': 0.1})
        assert tas_requirement_grade(requirement, node) == pytest.approx(0.125)

    def test_guard_defaults_to_node_config(self):
        node = load_node(FIXTURES / 'node_tsn.json')
        assert tas_requirement_grade(Requirement("tsn.tas", 5_000_000), node) == pytest.approx(37 / 52)

    def test_node_without_shaper(self, node_8core):
        assert tas_bare_metal(node_8core) == 0
        with pytest.raises(ScheduleLookupError):
            tas_requirement_grade(Requirement("tsn.tas", 1000), node_8core)

    @pytest.mark.parametrize("params, expected", [
        ({}, 1),
        ({'interface_id': 'eth0', 'class_id': 'tc6'}, 1),
        ({'interface_id': 'eth1'}, 0),
        ({'interface_id': 'eth0', 'class_id': 'tc7'}, 0),
    ])
    def test_bare_metal_honours_pinned_interface_and_class(self, params, expected):
        node = load_node(FIXTURES / 'node_tsn.json')
        assert tas_requirement_bare_metal(Requirement("tsn.tas", 5_000_000, params=params), node) == expected

    def test_missing_pinned_class_never_reaches_grading(self):
        node = load_node(FIXTURES / 'node_tsn.json')
        requirement = Requirement("tsn.tas", 5_000_000, params={'class_id': 'tc7'})
        assert tas_requirement_bare_metal(requirement, node) == 0
        with pytest.raises(ScheduleLookupError):
            tas_requirement_grade(requirement, node)
