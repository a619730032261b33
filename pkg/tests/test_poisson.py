#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

from fractions import Fraction

import numpy as np
import pytest

from pyybmaps.application.map_registry import general_vector_map, pair_vector_map
from pyybmaps.core.entities.mat2 import Mat2
from pyybmaps.core.services.leaf_reduction import chart_by_name, kdv_family_chart
from pyybmaps.core.entities.leaf_chart import ParamPoint


def test_structure_matrix_entries(services, mat, exact):
    J = services.poisson.structure_matrix(mat([[2, 3], [5, 7]]), Mat2.identity(exact))
    assert J[0, 1] == -3
    assert J[1, 0] == 3
    assert all(J[i, i] == 0 for i in range(4))
    assert all(J[i, j] == -J[j, i] for i in range(4) for j in range(4))


def test_casimirs_and_jacobi_on_random_matrices(services, rng):
    for _ in range(10):
        A, B = services.sampler.matrix(rng), services.sampler.matrix(rng)
        assert services.poisson.casimir_check(A, B)
        assert services.poisson.jacobi_check(B, A)


def test_jacobi_check_rejects_a_non_poisson_structure(services, mat, exact):
    def structure(A):
        # {a1, a2} = 1, {a2, a3} = a2, everything else zero
        J = np.full((4, 4), exact.zero(), dtype=object)
        for (i, j), value in {(0, 1): exact.one(), (1, 2): A.a2}.items():
            J[i, j], J[j, i] = value, -value
        return J
    assert not services.poisson.jacobi_check(Mat2.identity(exact), mat([[1, 2], [3, 4]]), structure)


def test_lie_algebra_matches_the_bracket(services, rng, exact):
    poisson = services.poisson
    B, A = services.sampler.matrix(rng), services.sampler.matrix(rng)
    lie = poisson.lie_structure_constants(B)
    linear = poisson.linearized_constants(B)
    for key, constants in lie.constants.items():
        assert all(exact.equal(a, b) for a, b in zip(constants, linear.constants[key]))
    assert lie.jacobi_holds(exact)
    assert poisson.equal_arrays(lie.lie_poisson_matrix(A), poisson.structure_matrix(A, B))
    assert poisson.lie_structure_constants(Mat2.zero(exact)).is_abelian(exact)


def test_general_map_is_poisson(services, mat):
    B = mat([[1, 0], [0, 2]])
    X, Y = mat([[2, 1], [1, 1]]), mat([[1, 2], [1, 4]])
    bracket = services.poisson.general_bracket(B)
    assert services.poisson.poisson_map_check(general_vector_map(services.refactorization, B),
                                              bracket, bracket, list(X.entries) + list(Y.entries))


def test_scaling_is_not_poisson(services, mat):
    bracket = services.poisson.general_bracket(mat([[1, 0], [0, 1]]))
    point = [2, 1, 1, 1, 1, 2, 1, 4]
    assert not services.poisson.poisson_map_check(lambda flat: [2 * v for v in flat],
                                                  bracket, bracket, point)


@pytest.mark.parametrize("map_name", ["adler_yamilov_map", "kdv_lift_map"])
@pytest.mark.parametrize("sign", [1, -1])
def test_closed_form_maps_preserve_the_canonical_bracket(services, map_name, sign):
    poisson = services.poisson
    bracket = poisson.constant_bracket(poisson.canonical_block(sign))
    fn = pair_vector_map(getattr(services.limits, map_name), 3, 1)
    assert poisson.poisson_map_check(fn, bracket, bracket, [1, 2, 0, 1])


def test_reduced_bracket_on_the_identity_chart(services):
    chart = chart_by_name("identity", services.field)
    J = services.leaf_reduction.reduced_bracket(chart, ParamPoint((2, 1), (1, 3)))
    assert J.shape == (2, 2)
    assert J[0, 1] == -1


def test_reduced_bracket_of_the_kdv_family(services, exact):
    eps = exact.lift("1/10")
    chart = kdv_family_chart(exact, eps)
    point = ParamPoint((exact.lift(1), exact.lift(2)), (exact.lift(5),))
    J = services.leaf_reduction.reduced_bracket(chart, point)
    assert J[0, 1] == Fraction(-7, 10)


def test_a_coordinate_function_is_not_a_casimir(services, mat, exact):
    A = mat([[2, 3], [5, 7]])
    B = Mat2.identity(exact)
    one, zero = exact.one(), exact.zero()
    residuals = services.poisson.casimir_residuals(A, B, [one, zero, zero, zero])
    assert residuals[1] == 3
    assert not all(exact.is_zero(r) for r in residuals)
    for gradient in services.poisson.casimir_gradients(A, B):
        assert all(exact.is_zero(r) for r in services.poisson.casimir_residuals(A, B, gradient))
