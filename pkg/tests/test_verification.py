#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

from pyybmaps.core.entities.leaf_chart import ParamPoint
from pyybmaps.core.entities.mat2 import Mat2
from pyybmaps.core.errors import DomainError


def test_swap_is_a_yang_baxter_map(services, mat):
    X, Y, Z = mat([[1, 2], [3, 4]]), mat([[0, 1], [1, 0]]), mat([[2, 0], [0, 2]])
    assert services.verifier.yb_cube_check(lambda x, y, p, q: (y, x), X, Y, Z)


def test_cube_sides_expose_a_non_yang_baxter_map(services):
    verifier = services.verifier

    def additive(x, y, p, q):
        return y + x, x

    lhs, rhs = verifier.yb_cube_sides(additive, 1, 2, 3)
    assert lhs == (6, 4, 1)
    assert rhs == (8, 3, 1)
    assert not verifier.yb_cube_check(additive, 1, 2, 3)


def test_parameters_follow_their_factor(services):
    seen = []

    def recorder(x, y, p, q):
        seen.append((p, q))
        return y, x

    services.verifier.yb_cube_sides(recorder, 1, 2, 3, params=("a", "b", "c"))
    assert seen == [("a", "b"), ("a", "c"), ("b", "c"), ("b", "c"), ("a", "c"), ("a", "b")]


def test_general_map_satisfies_the_yang_baxter_equation(services, rng, exact):
    B = Mat2.from_rows([[1, 1], [0, 1]], exact)
    checked = 0
    for _ in range(20):
        X, Y, Z = services.sampler.matrix_triple(rng)
        try:
            assert services.verifier.yb_cube_check(
                lambda x, y, p, q: services.refactorization.apply(x, y, B), X, Y, Z)
        except DomainError:
            continue
        checked += 1
    assert checked > 0


def test_elements_equal_recurses(services, exact):
    verifier = services.verifier
    one = exact.one()
    p = ParamPoint((one, exact.lift(2)), (exact.lift(3),))
    assert verifier.elements_equal((p, [one]), (ParamPoint((1, 2), (3,)), [1]))
    assert not verifier.elements_equal((p,), (p, p))
    assert not verifier.elements_equal(p, ParamPoint((1, 2), (4,)))


def test_float_comparison_uses_the_tolerance(float_services):
    verifier = float_services.verifier
    assert verifier.elements_equal((1.0, 2.0), (1.0 + 1e-12, 2.0))
    assert not verifier.elements_equal((1.0, 2.0), (1.1, 2.0))
