#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

from fractions import Fraction

import pytest

from pyybmaps.core.services.differentiation import DifferentiationService


@pytest.fixture
def differentiation(exact):
    return DifferentiationService(exact)


def test_derivative_of_polynomial_and_reciprocal(differentiation):
    assert differentiation.derivative_of(lambda x: x * x * x, 2) == 12
    assert differentiation.derivative_of(lambda x: 1 / x, 2) == Fraction(-1, 4)


def test_derivative_of_constant_is_zero(differentiation):
    assert differentiation.derivative_of(lambda x: 7, 3) == 0


def test_value_and_jacobian(differentiation):
    values, J = differentiation.value_and_jacobian(lambda p: [p[0] * p[1], p[0] + p[1]], [2, 3])
    assert values == [6, 5]
    assert J.shape == (2, 2)
    assert J.tolist() == [[3, 2], [1, 1]]


def test_jacobian_of_constant_output(differentiation):
    values, J = differentiation.value_and_jacobian(lambda p: [p[0], 5], [4])
    assert values == [4, 5]
    assert J.tolist() == [[1], [0]]


def test_finite_differences_approximate_the_exact_jacobian(floating):
    differentiation = DifferentiationService(floating)

    def fn(p):
        return [p[0] * p[0] / (p[1] + 3), p[1] - p[0] * p[1]]

    point = [1.5, 0.5]
    exact = differentiation.map_jacobian(fn, point)
    approximate = differentiation.finite_difference_jacobian(fn, point)
    loose = floating.with_tolerance(1e-6)
    assert all(loose.equal(a, b) for a, b in zip(exact.flat, approximate.flat))


def test_central_difference(floating):
    differentiation = DifferentiationService(floating)
    slope = differentiation.central_difference(lambda x: x * x, 3)
    assert floating.with_tolerance(1e-6).equal(slope, 6)


def test_five_point_differences_are_fourth_order(floating):
    differentiation = DifferentiationService(floating)
    # a plain central difference with h = 1e-3 is off by about 1e-6 here
    slope = differentiation.finite_difference_jacobian(lambda p: [1 / p[0]], [1.0])[0, 0]
    assert abs(slope.to_complex() + 1) < 1e-9
