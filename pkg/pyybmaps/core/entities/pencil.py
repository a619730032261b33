#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
Matrix Pencil Entities for PyYBMaps

First-degree matrix polynomials L(z) = A - z*B, the coefficients of
det(A - z*B) = f2*z^2 - f1*z + f0, and products of pencils compared
coefficient by coefficient.
"""

from dataclasses import dataclass
from typing import Any, Iterable, Tuple

from .mat2 import Mat2


@dataclass(frozen=True)
class PencilInvariants:
    """Coefficients of det(A - z*B) = f2*z^2 - f1*z + f0"""

    f0: Any
    f1: Any
    f2: Any

    def evaluate(self, zeta: Any) -> Any:
        return self.f2 * zeta * zeta - self.f1 * zeta + self.f0

    def matches(self, other: 'PencilInvariants', field) -> bool:
        return (field.equal(self.f0, other.f0)
                and field.equal(self.f1, other.f1)
                and field.equal(self.f2, other.f2))

    def as_tuple(self) -> Tuple[Any, Any, Any]:
        return (self.f0, self.f1, self.f2)


def invariants(A: Mat2, B: Mat2) -> PencilInvariants:
    """f0 = det A, f2 = det B and the bilinear f1, valid for singular B"""
    f1 = A.a1 * B.a4 + A.a4 * B.a1 - A.a3 * B.a2 - A.a2 * B.a3
    return PencilInvariants(f0=A.det(), f1=f1, f2=B.det())


def f1_trace_form(A: Mat2, B: Mat2) -> Any:
    """det B * tr(A B^-1); agrees with the bilinear f1 whenever B is invertible"""
    return B.det() * (A @ B.inverse()).trace()


@dataclass(frozen=True)
class MatrixPencil:
    """L(z) = A - z*B"""

    A: Mat2
    B: Mat2

    def evaluate(self, zeta: Any) -> Mat2:
        return self.A - self.B * zeta

    def invariants(self) -> PencilInvariants:
        return invariants(self.A, self.B)

    def determinant_at(self, zeta: Any) -> Any:
        return self.evaluate(zeta).det()

    def as_polynomial(self) -> 'MatrixPolynomial':
        return MatrixPolynomial((self.A, -self.B))


@dataclass(frozen=True)
class MatrixPolynomial:
    """Matrix coefficients of z^0, z^1, ... in increasing degree"""

    coefficients: Tuple[Mat2, ...]

    @classmethod
    def product(cls, factors: Iterable[MatrixPencil]) -> 'MatrixPolynomial':
        result = None
        for factor in factors:
            poly = factor.as_polynomial()
            result = poly if result is None else result @ poly
        if result is None:
            raise ValueError("product of no pencils")
        return result

    def __matmul__(self, other: 'MatrixPolynomial') -> 'MatrixPolynomial':
        out = [None] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, P in enumerate(self.coefficients):
            for j, Q in enumerate(other.coefficients):
                term = P @ Q
                out[i + j] = term if out[i + j] is None else out[i + j] + term
        return MatrixPolynomial(tuple(out))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, zeta: Any) -> Mat2:
        result = self.coefficients[-1]
        for coefficient in reversed(self.coefficients[:-1]):
            result = result * zeta + coefficient
        return result

    def equals(self, other: 'MatrixPolynomial', field) -> bool:
        shorter, longer = sorted((self.coefficients, other.coefficients), key=len)
        for P, Q in zip(shorter, longer):
            if not P.equals(Q, field):
                return False
        return all(field.is_zero(a) for extra in longer[len(shorter):] for a in extra.entries)


def pencil_product_equal(L1: MatrixPencil, L2: MatrixPencil,
                         L3: MatrixPencil, L4: MatrixPencil, field) -> bool:
    """L1(z)L2(z) == L3(z)L4(z) as polynomials in z"""
    left = L1.as_polynomial() @ L2.as_polynomial()
    right = L3.as_polynomial() @ L4.as_polynomial()
    return left.equals(right, field)


def triple_products(X: Mat2, Y: Mat2, Z: Mat2, B: Mat2) -> Tuple[Mat2, Mat2, Mat2]:
    """K = XYZ, L = XYB + XBZ + BYZ, M = XB^2 + BYB + B^2 Z"""
    B2 = B @ B
    K = X @ Y @ Z
    L = X @ Y @ B + X @ B @ Z + B @ Y @ Z
    M = X @ B2 + B @ Y @ B + B2 @ Z
    return K, L, M
