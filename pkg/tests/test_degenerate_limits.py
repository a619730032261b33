#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

from fractions import Fraction
import math

import pytest

from pyybmaps.core.errors import BackendUnsupported, PoleEncountered, SqueezeViolated


def test_adler_yamilov_map(services):
    u, v = services.limits.adler_yamilov_map((1, 1), (1, 1), 3, 1)
    assert u == (0, 1)
    assert v == (1, 2)


def test_kdv_lift_map(services):
    u, v = services.limits.kdv_lift_map((1, 2), (0, 1), 3, 1)
    assert u == (1, 1)
    assert v == (1, 1)


@pytest.mark.parametrize("map_name", ["adler_yamilov_map", "kdv_lift_map"])
def test_closed_forms_have_poles(services, map_name):
    with pytest.raises(PoleEncountered):
        getattr(services.limits, map_name)((1, 0), (0, -1), 3, 1)


def test_adler_yamilov_family_needs_a_square_root(services):
    with pytest.raises(BackendUnsupported):
        services.limits.ay_family_map((1, 1), (1, 1), 3, 1, Fraction(1, 1000))


def _converges(report):
    assert report.monotone, report.to_dict()
    assert report.order is None or report.order >= 0.8
    assert report.final_error < 1e-4


def test_adler_yamilov_family_converges(float_services):
    limits = float_services.limits
    closed = limits.adler_yamilov_map((1, 1), (1, 1), 3, 1)
    _converges(limits.limit_convergence_check(
        lambda eps: limits.ay_family_map((1, 1), (1, 1), 3, 1, eps), closed))


def test_kdv_family_converges_exactly(services):
    limits = services.limits
    closed = limits.kdv_lift_map((1, 2), (0, 1), 3, 1)
    _converges(limits.limit_convergence_check(
        lambda eps: limits.kdv_family_map((1, 2), (0, 1), 3, 1, eps), closed))


@pytest.mark.parametrize("family, closed_form, backend", [
    ("ay_family_map", "adler_yamilov_map", "float_services"),
    ("kdv_family_map", "kdv_lift_map", "services"),
    ("kdv_family_map", "kdv_lift_map", "float_services"),
])
def test_families_converge_near_the_origin(request, family, closed_form, backend):
    limits = request.getfixturevalue(backend).limits
    args = ((0.5, 0.25), (0.25, 0.5), 0.5, 0.25)
    closed = getattr(limits, closed_form)(*args)
    report = limits.limit_convergence_check(lambda eps: getattr(limits, family)(*args, eps), closed)
    _converges(report)
    assert report.final_error < 1e-5


def _shifted(field, shift):
    def family(eps):
        return ((field.lift(1 + shift(eps)), field.lift(2)),)
    return family


def test_convergence_check_measures_the_order(floating, float_services):
    closed = ((floating.lift(1), floating.lift(2)),)
    report = float_services.limits.limit_convergence_check(_shifted(floating, lambda eps: eps), closed)
    assert report.passed
    assert report.order == pytest.approx(1.0, abs=0.05)
    assert report.to_dict()["schedule"] == [1e-3, 1e-4, 1e-5, 1e-6, 1e-7]


def test_convergence_check_rejects_slow_or_no_convergence(floating, float_services):
    limits = float_services.limits
    closed = ((floating.lift(1), floating.lift(2)),)
    slow = limits.limit_convergence_check(_shifted(floating, math.sqrt), closed)
    assert not slow.passed
    assert slow.order == pytest.approx(0.5, abs=0.05)
    stuck = limits.limit_convergence_check(_shifted(floating, lambda eps: 1.0), closed)
    assert not stuck.passed
    assert not stuck.monotone


def test_errors_below_the_noise_floor_count_as_converged(floating, float_services):
    closed = ((floating.lift(1), floating.lift(2)),)
    report = float_services.limits.limit_convergence_check(_shifted(floating, lambda eps: 0.0), closed)
    assert report.passed
    assert report.order is None


def test_convergence_schedule_must_decrease(floating, float_services):
    closed = ((floating.lift(1), floating.lift(2)),)
    with pytest.raises(ValueError):
        float_services.limits.limit_convergence_check(_shifted(floating, lambda eps: eps), closed,
                                                      schedule=(1e-3, 1e-2))


def test_squeeze_gives_the_kdv_quad_equation(services):
    quad = services.limits.kdv_quadgraph_reduce((2, 0), (0, 1), 2, 1)
    assert quad.f12 == 1
    assert (quad.f, quad.f1, quad.f2) == (0, 2, 1)
    assert quad.residual == 0


def test_squeeze_requires_y1_equal_to_x2(services):
    with pytest.raises(SqueezeViolated):
        services.limits.kdv_quadgraph_reduce((2, 1), (0, 1), 2, 1)


def test_adler_yamilov_map_solves_its_degenerate_lax_equation(services):
    report = services.limits.degenerate_lax_check("L1", (1, 1), (1, 1), 3, 1)
    assert report.image_satisfies
    assert report.alternative is None
    assert report.passed


def test_kdv_lax_equation_has_a_second_solution(services):
    report = services.limits.degenerate_lax_check("L2", (2, 0), (0, 1), 2, 1)
    assert report.image == ((Fraction(1, 3), 1), (2, Fraction(-1, 3)))
    assert report.alternative == ((Fraction(1, 3), 2), (1, Fraction(-1, 3)))
    assert report.alternative_satisfies
    assert report.non_unique
    assert report.swap_satisfies is False
    assert report.passed


def test_second_solution_coincides_when_x1_equals_y2(services):
    report = services.limits.degenerate_lax_check("L2", (1, 2), (0, 1), 3, 1)
    assert report.passed
    assert not report.non_unique
    assert report.notes


def test_unknown_degenerate_lax_matrix(services):
    with pytest.raises(ValueError):
        services.limits.degenerate_lax_matrix("L3", (1, 1), 1)
    with pytest.raises(ValueError):
        services.limits.degenerate_lax_check("L3", (1, 1), (1, 1), 1, 2)
