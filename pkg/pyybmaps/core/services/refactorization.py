#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
Re-factorization Services for PyYBMaps

The Yang-Baxter map R_B(X, Y) = (U, V) obtained by rewriting
(Y - zB)(X - zB) as (U - zB)(V - zB) with det(U - Y) != 0, its inverse
branch, the trivial branch and the three-factor reconstruction behind the
uniqueness argument.
"""

from typing import Tuple

from ..entities.mat2 import Mat2
from ..entities.pencil import MatrixPencil, invariants, pencil_product_equal, triple_products
from ..entities.refactor_result import RefactorResult
from ..errors import NonGenericTriple, SingularB, SingularDifference, SingularMatrix, SingularP1


class RefactorizationService:
    """Service for the general re-factorization map R_B"""

    def __init__(self, field):
        self.field = field

    def _inverse_of_B(self, B: Mat2) -> Mat2:
        try:
            return B.inverse()
        except SingularMatrix:
            raise SingularB(f"det B = 0 for B = {B}") from None

    def characteristic_combinations(self, X: Mat2, Y: Mat2, B: Mat2) -> Tuple[Mat2, Mat2]:
        """P1 = f2(X)(YB + BX) - f1(X)B^2, P2 = f2(X)YX - f0(X)B^2"""
        f = invariants(X, B)
        B2 = B @ B
        P1 = (Y @ B + B @ X) * f.f2 - B2 * f.f1
        P2 = (Y @ X) * f.f2 - B2 * f.f0
        return P1, P2

    def refactor(self, X: Mat2, Y: Mat2, B: Mat2) -> RefactorResult:
        """U = P2 P1^-1 B, V = B^-1 (YB + BX - UB)"""
        B_inv = self._inverse_of_B(B)
        P1, P2 = self.characteristic_combinations(X, Y, B)
        try:
            P1_inv = P1.inverse()
        except SingularMatrix:
            raise SingularP1(f"det P1 = 0 for X = {X}, Y = {Y}") from None
        U = P2 @ P1_inv @ B
        V = B_inv @ (Y @ B + B @ X - U @ B)
        return RefactorResult(
            U=U,
            V=V,
            invariants_in=(invariants(X, B), invariants(Y, B)),
            invariants_out=(invariants(U, B), invariants(V, B)),
        )

    def apply(self, X: Mat2, Y: Mat2, B: Mat2) -> Tuple[Mat2, Mat2]:
        """R_B as a plain map (X, Y) -> (U, V)"""
        return self.refactor(X, Y, B).pair

    @staticmethod
    def trivial_branch(X: Mat2, Y: Mat2) -> Tuple[Mat2, Mat2]:
        return Y, X

    def inverse_refactor(self, U: Mat2, Y: Mat2, B: Mat2) -> Tuple[Mat2, Mat2]:
        """Recover (X, V) from (U, Y): the other partial map of R_B"""
        B_inv = self._inverse_of_B(B)
        D = Y - U
        try:
            D_inv = D.inverse()
        except SingularMatrix:
            raise SingularDifference(f"det(U - Y) = 0 for U = {U}, Y = {Y}") from None
        # (U - Y)^-1 ... (U - Y) equals D^-1 ... D, the two sign flips cancel
        X = D_inv @ U @ B_inv @ D @ B
        V = D_inv @ Y @ B_inv @ D @ B
        return X, V

    def reconstruct_first_factor(self, X: Mat2, Y: Mat2, Z: Mat2, B: Mat2) -> Mat2:
        """Recover X from the coefficients of (X - zB)(Y - zB)(Z - zB) and f_i(X)"""
        self._inverse_of_B(B)
        f = invariants(X, B)
        K, L, M = triple_products(X, Y, Z, B)
        B3 = B @ B @ B
        N = L * (f.f2 * f.f2) - M * (f.f2 * f.f1) + B3 * (f.f1 * f.f1 - f.f2 * f.f0)
        R = K * (f.f2 * f.f2) - M * (f.f2 * f.f0) + B3 * (f.f1 * f.f0)
        try:
            N_inv = N.inverse()
        except SingularMatrix:
            raise NonGenericTriple(f"det N = 0 for X = {X}, Y = {Y}, Z = {Z}") from None
        return R @ N_inv @ B

    def general_map_domain(self, X: Mat2, Y: Mat2, B: Mat2) -> bool:
        """det B != 0 and det P1 != 0"""
        if self.field.is_zero(B.det()):
            return False
        P1, _ = self.characteristic_combinations(X, Y, B)
        return not self.field.is_zero(P1.det())

    def verify(self, X: Mat2, Y: Mat2, B: Mat2, result: RefactorResult) -> bool:
        """UV = YX, UB + BV = YB + BX and invariant transfer"""
        U, V = result.pair
        field = self.field
        return ((U @ V).equals(Y @ X, field)
                and (U @ B + B @ V).equals(Y @ B + B @ X, field)
                and result.invariants_transferred(field)
                and pencil_product_equal(MatrixPencil(U, B), MatrixPencil(V, B),
                                         MatrixPencil(Y, B), MatrixPencil(X, B), field))
