#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

import pytest

from pyybmaps.core.entities.mat2 import Mat2
from pyybmaps.core.entities.pencil import (
    MatrixPencil,
    MatrixPolynomial,
    f1_trace_form,
    invariants,
    pencil_product_equal,
    triple_products,
)


def test_invariants_for_identity_B(mat, exact):
    f = invariants(mat([[2, 1], [1, 1]]), Mat2.identity(exact))
    assert f.as_tuple() == (1, 3, 1)


def test_invariants_are_the_determinant_coefficients(mat, exact):
    A = mat([[2, "i"], [3, -1]])
    B = mat([[1, 2], ["1/2", 5]])
    f = invariants(A, B)
    pencil = MatrixPencil(A, B)
    for zeta in (0, 1, -2, "3/4+i"):
        z = exact.lift(zeta)
        assert pencil.determinant_at(z) == f.evaluate(z)


def test_bilinear_f1_holds_for_singular_B(mat):
    A = mat([[2, 3], [5, 7]])
    f = invariants(A, mat([[1, 0], [0, 0]]))
    assert f.f2 == 0
    assert f.f1 == 7


def test_trace_form_agrees_with_bilinear_f1(mat):
    A = mat([[2, 1], [1, 1]])
    B = mat([[1, 1], [0, 2]])
    assert f1_trace_form(A, B) == invariants(A, B).f1 == 4


def test_matrix_polynomial_product_evaluates_factorwise(mat, exact):
    L1 = MatrixPencil(mat([[2, 1], [1, 1]]), mat([[1, 1], [0, 1]]))
    L2 = MatrixPencil(mat([[0, 3], [2, 2]]), mat([[1, 0], [0, 2]]))
    product = MatrixPolynomial.product([L1, L2])
    assert product.degree == 2
    z = exact.lift("1/2")
    assert product.evaluate(z) == L1.evaluate(z) @ L2.evaluate(z)


def test_empty_product_is_rejected():
    with pytest.raises(ValueError):
        MatrixPolynomial.product([])


def test_pencil_products_compare_coefficientwise(mat, exact):
    identity = Mat2.identity(exact)
    X, Y = mat([[2, 1], [1, 1]]), mat([[1, 0], [0, 2]])
    U, V = mat([[1, 1], [1, 2]]), mat([[2, 0], [0, 1]])
    pencil = lambda A: MatrixPencil(A, identity)
    assert pencil_product_equal(pencil(U), pencil(V), pencil(Y), pencil(X), exact)
    assert not pencil_product_equal(pencil(V), pencil(U), pencil(Y), pencil(X), exact)


def test_triple_products(mat, exact):
    X, Y, Z = mat([[2, 1], [1, 1]]), mat([[1, 0], [0, 2]]), mat([[1, 1], [0, 1]])
    K, L, M = triple_products(X, Y, Z, Mat2.identity(exact))
    assert K == mat([[2, 4], [1, 3]])
    assert L == mat([[5, 6], [2, 6]])
    assert M == mat([[4, 2], [1, 4]])
