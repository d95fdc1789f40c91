"""Tests for the combined suitability and the shared domain types."""
import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from src.core import combine
from src.core.errors import ContractViolationError, NodeAssessError
from src.core.models import AdmissionRequest, Requirement, SuitabilityBreakdown, as_rational

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
positive_unit = st.floats(min_value=1e-9, max_value=1.0, allow_nan=False)


def test_combine_all_ones_is_one():
    assert combine(1, 1.0, 1.0, 1.0, 1.0) == 1.0


def test_combine_averages_proximity_and_history():
    assert combine(1, 1.0, 1.0, 0.4, 0.0) == pytest.approx(0.2, abs=1e-15)
    assert combine(1, 0.5, 0.5, 1.0, 1.0) == 0.25


@given(unit, positive_unit, unit, unit)
def test_combine_bare_metal_zero_annihilates(current, priority_grade, proximity, history):
    assert combine(0, current, priority_grade, proximity, history) == 0.0


@given(positive_unit, unit, unit)
def test_combine_zero_current_annihilates(priority_grade, proximity, history):
    assert combine(1, 0.0, priority_grade, proximity, history) == 0.0


@given(unit, positive_unit, unit, unit)
def test_combine_stays_in_unit_interval(current, priority_grade, proximity, history):
    value = combine(1, current, priority_grade, proximity, history)
    assert 0.0 <= value <= 1.0


def test_combine_rejects_out_of_range_inputs():
    with pytest.raises(ContractViolationError) as excinfo:
        combine(1, 1.5, 1.0, 1.0, 1.0)
    assert excinfo.value.name == "current_resources"
    with pytest.raises(ContractViolationError):
        combine(2, 1.0, 1.0, 1.0, 1.0)
    with pytest.raises(ContractViolationError) as excinfo:
        combine(1, 1.0, 0.0, 1.0, 1.0)
    assert excinfo.value.name == "priority_grade"
    with pytest.raises(ContractViolationError):
        combine(1, 1.0, 1.0, float('nan'), 1.0)


def test_combine_accepts_arrays():
    proximity = np.array([0.0, 0.5, 1.0])
    result = combine(1, 1.0, 1.0, proximity, 0.0)
    assert isinstance(result, np.ndarray)
    np.testing.assert_allclose(result, [0.0, 0.25, 0.5])


def test_contract_violation_is_a_value_error():
    error = ContractViolationError("tau", 0.4, "(0.5, 1.0)")
    assert isinstance(error, ValueError)
    assert isinstance(error, NodeAssessError)
    assert "tau=0.4" in str(error)


def test_as_rational_reads_floats_through_their_repr():
    assert as_rational(0.1) == Fraction(1, 10)
    assert as_rational("4.4") == Fraction(22, 5)
    with pytest.raises(ContractViolationError):
        as_rational(True)
    with pytest.raises(ContractViolationError):
        as_rational("lots")


def test_requirement_rejects_negative_amounts():
    with pytest.raises(ContractViolationError):
        Requirement("cpu.cores", -1)


def test_request_needs_requirements_and_integer_priority():
    with pytest.raises(ContractViolationError):
        AdmissionRequest((), priority=0)
    with pytest.raises(ContractViolationError):
        AdmissionRequest((Requirement("cpu.cores", 1),), priority=-1)
    request = AdmissionRequest((Requirement("cpu.cores", 1),), priority=8)
    with pytest.raises(ContractViolationError):
        request.validate(p_max=7)


def test_request_json_document():
    document = {
        'request_id': 'r1', 'talker': 'T', 'listener': 'L', 'priority': 3,
        'requirements': [{'kind': 'cpu.cores', 'amount': 2},
                         {'kind': 'tsn.tas', 'amount': 5000000, 'params': {'class_id': 'tc5'}}]
    }
    request = AdmissionRequest.from_json(json.dumps(document))
    assert request.kinds == ('cpu.cores', 'tsn.tas')
    assert request.requirements[1].params == {'class_id': 'tc5'}
    assert request.to_dict() == document


def test_breakdown_serializes_per_requirement_pairs():
    breakdown = SuitabilityBreakdown(1, 0.75, 0.5, 1.0, 0.0, 0.1875, per_requirement=(('cpu.cores', 0.75),))
    data = breakdown.to_dict()
    assert data['per_requirement'] == [['cpu.cores', 0.75]]
    assert data['failing_kind'] is None
    assert SuitabilityBreakdown.from_dict(json.loads(breakdown.to_json())) == breakdown


def test_unknown_log_level():
    from src.core.logger import set_log_level
    with pytest.raises(ValueError):
        set_log_level("chatty")
