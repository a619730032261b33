#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

import pytest

from pyybmaps.application.map_registry import (
    base_matrix,
    build_map_registry,
    evaluate_from_json,
    map_by_name,
    map_names,
)
from pyybmaps.core.errors import ScalarParseError, UnknownMap


@pytest.fixture
def registry(services):
    return build_map_registry(services)


def _evaluate(registry, services, name, data):
    return evaluate_from_json(map_by_name(name, registry), data, services.field)


def test_registry_names(registry):
    assert list(registry) == map_names()
    assert "general-jordan" in registry
    assert "reduced-identity-f1" in registry
    with pytest.raises(UnknownMap):
        map_by_name("lozi", registry)
    with pytest.raises(UnknownMap):
        base_matrix("nilpotent", None)


def test_backend_support(registry, exact, floating):
    assert not registry["ay-family"].supports(exact)
    assert registry["ay-family"].supports(floating)
    assert registry["kdv-family"].supports(exact)
    data = registry["ay-family"].to_dict()
    assert data["float"] and not data["exact"]
    assert data["needs_epsilon"]
    assert "limits/adler-yamilov" in data["suites"]


def test_evaluate_general_map(registry, services):
    data = {"x": {"a1": 2, "a2": 1, "a3": 1, "a4": 1}, "y": [[1, 0], [0, 2]]}
    result = _evaluate(registry, services, "general-identity", data)
    assert result["map"] == "general-identity"
    assert result["backend"] == "gaussian-rational"
    assert result["u"] == {"a1": "1+0i", "a2": "1+0i", "a3": "1+0i", "a4": "2+0i"}
    assert result["v"] == {"a1": "2+0i", "a2": "0+0i", "a3": "0+0i", "a4": "1+0i"}


def test_evaluate_reduced_map(registry, services):
    data = {"x": [2, 1], "alpha": [1, 3], "y": [1, 2], "beta": ["2", "5"]}
    result = _evaluate(registry, services, "reduced-identity", data)
    assert result["u"] == ["0+0i", "3/2+0i"]
    assert result["v"] == ["3+0i", "3/2+0i"]


def test_scalar_parameter_is_accepted_for_one_level(registry, services):
    data = {"x": [2, 1], "alpha": 3, "y": [1, 2], "beta": "3"}
    result = _evaluate(registry, services, "reduced-sl2", data)
    assert result["u"] == ["1+0i", "2+0i"]
    assert result["v"] == ["2+0i", "1+0i"]


def test_wrong_parameter_count(registry, services):
    data = {"x": [2, 1], "alpha": [1], "y": [1, 2], "beta": [2, 5]}
    with pytest.raises(ScalarParseError):
        _evaluate(registry, services, "reduced-identity", data)


def test_evaluate_closed_form(registry, services):
    data = {"x": [1, 2], "y": [0, 1], "alpha": 3, "beta": 1}
    result = _evaluate(registry, services, "kdv-lift", data)
    assert result["u"] == ["1+0i", "1+0i"]
    assert result["v"] == ["1+0i", "1+0i"]


def test_missing_inputs(registry, services):
    with pytest.raises(ScalarParseError):
        _evaluate(registry, services, "kdv-family", {"x": [1, 2], "y": [0, 1], "alpha": 3, "beta": 1})
    with pytest.raises(ScalarParseError):
        _evaluate(registry, services, "kdv-lift", {"x": [1, 2], "y": [0, 1], "alpha": 3})
    with pytest.raises(ScalarParseError):
        _evaluate(registry, services, "general-diag", {"y": [[1, 0], [0, 1]]})


def test_domain_predicate(registry, services):
    lift = services.field.lift
    entry = registry["adler-yamilov"]
    assert entry.domain((lift(1), lift(1)), (lift(1), lift(1)), lift(3), lift(1))
    assert not entry.domain((lift(1), lift(0)), (lift(0), lift(-1)), lift(3), lift(1))
    assert registry["trivial"].domain(None, None)
