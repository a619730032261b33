#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
Sklyanin Poisson Structure Services for PyYBMaps

The restriction J_B of the Sklyanin bracket to pencils A - zB, its
Casimirs f0 and f1, the Jacobi identity, the four dimensional Lie algebra
whose Lie-Poisson bracket is J_B, and the pointwise test that a map is
Poisson: DR . J_in . DR^T = J_out o R.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..entities.mat2 import Mat2
from ..entities.scalars import DualScalar, derivative_part
from .differentiation import DifferentiationService, VectorMap

StructureFn = Callable[[Mat2], np.ndarray]


@dataclass(frozen=True, eq=False)
class ProductBracket:
    """Block-diagonal bracket, one block per factor, zero across blocks"""

    blocks: Tuple[np.ndarray, ...]

    def matrix(self, zero: Any) -> np.ndarray:
        size = sum(block.shape[0] for block in self.blocks)
        out = np.full((size, size), zero, dtype=object)
        offset = 0
        for block in self.blocks:
            n = block.shape[0]
            out[offset:offset + n, offset:offset + n] = block
            offset += n
        return out


@dataclass(frozen=True, eq=False)
class LieStructure:
    """[e_i, e_j] = sum_k constants[(i, j)][k] e_k for 1 <= i < j <= 4"""

    constants: Dict[Tuple[int, int], Tuple[Any, Any, Any, Any]]
    zero: Any

    def bracket(self, i: int, j: int) -> Tuple[Any, ...]:
        if i == j:
            return (self.zero,) * 4
        if i < j:
            return self.constants[(i, j)]
        return tuple(-c for c in self.constants[(j, i)])

    def bracket_of_vectors(self, u: Sequence[Any], v: Sequence[Any]) -> List[Any]:
        out = [self.zero] * 4
        for i in range(1, 5):
            for j in range(1, 5):
                if i == j:
                    continue
                weight = u[i - 1] * v[j - 1]
                for k, c in enumerate(self.bracket(i, j)):
                    out[k] = out[k] + weight * c
        return out

    def is_abelian(self, field) -> bool:
        return all(field.is_zero(c) for coefficients in self.constants.values() for c in coefficients)

    def jacobi_holds(self, field) -> bool:
        basis = [[field.one() if k == i else field.zero() for k in range(4)] for i in range(4)]
        for i, j, k in combinations(range(4), 3):
            ei, ej, ek = basis[i], basis[j], basis[k]
            total = [a + b + c for a, b, c in zip(
                self.bracket_of_vectors(self.bracket_of_vectors(ei, ej), ek),
                self.bracket_of_vectors(self.bracket_of_vectors(ej, ek), ei),
                self.bracket_of_vectors(self.bracket_of_vectors(ek, ei), ej),
            )]
            if not all(field.is_zero(t) for t in total):
                return False
        return True

    def lie_poisson_matrix(self, A: Mat2) -> np.ndarray:
        """{a_i, a_j} = sum_k C_ij^k a_k on the dual"""
        a = A.entries
        out = np.full((4, 4), self.zero, dtype=object)
        for i in range(1, 5):
            for j in range(1, 5):
                value = self.zero
                for c, ak in zip(self.bracket(i, j), a):
                    value = value + c * ak
                out[i - 1, j - 1] = value
        return out


class PoissonStructureService:
    """Service for the restricted Sklyanin bracket J_B"""

    def __init__(self, field, differentiation: Optional[DifferentiationService] = None):
        self.field = field
        self.differentiation = differentiation or DifferentiationService(field)

    def structure_matrix(self, A: Mat2, B: Mat2) -> np.ndarray:
        """4x4 antisymmetric J_B(A), entries {a_i, a_j}"""
        a1, a2, a3, a4 = A.entries
        b1, b2, b3, b4 = B.entries
        upper = {
            (0, 1): a1 * b2 - a2 * b1,
            (0, 2): a3 * b1 - a1 * b3,
            (0, 3): a3 * b2 - a2 * b3,
            (1, 2): a4 * b1 - a1 * b4,
            (1, 3): a4 * b2 - a2 * b4,
            (2, 3): a3 * b4 - a4 * b3,
        }
        J = np.full((4, 4), a1 * 0, dtype=object)
        for (i, j), value in upper.items():
            J[i, j] = value
            J[j, i] = -value
        return J

    def product_bracket(self, matrices: Sequence[Mat2], B: Mat2) -> ProductBracket:
        return ProductBracket(tuple(self.structure_matrix(A, B) for A in matrices))

    def general_bracket(self, B: Mat2) -> Callable[[Sequence[Any]], ProductBracket]:
        """Bracket on C^4 x C^4 coordinates (x1..x4, y1..y4)"""
        def bracket(point: Sequence[Any]) -> ProductBracket:
            X = Mat2.from_entries(point[:4])
            Y = Mat2.from_entries(point[4:])
            return self.product_bracket((X, Y), B)
        return bracket

    def constant_bracket(self, block: np.ndarray, factors: int = 2) -> Callable[[Sequence[Any]], ProductBracket]:
        def bracket(point: Sequence[Any]) -> ProductBracket:
            return ProductBracket((block,) * factors)
        return bracket

    def canonical_block(self, sign: int = 1) -> np.ndarray:
        """[[0, s], [-s, 0]]: {x1, x2} = s"""
        s = self.field.lift(sign)
        return np.array([[self.field.zero(), s], [-s, self.field.zero()]], dtype=object)

    def equal_arrays(self, lhs: np.ndarray, rhs: np.ndarray) -> bool:
        if lhs.shape != rhs.shape:
            return False
        return all(self.field.equal(a, b) for a, b in zip(lhs.flat, rhs.flat))

    def poisson_map_sides(self, map_fn: VectorMap,
                          bracket_in: Callable[[Sequence[Any]], ProductBracket],
                          bracket_out: Callable[[Sequence[Any]], ProductBracket],
                          point: Sequence[Any]) -> Tuple[np.ndarray, np.ndarray]:
        """(DR . J_in(p) . DR^T, J_out(R(p)))"""
        point = [self.field.lift(p) for p in point]
        values, DR = self.differentiation.value_and_jacobian(map_fn, point)
        zero = self.field.zero()
        J_in = bracket_in(point).matrix(zero)
        J_out = bracket_out(values).matrix(zero)
        return DR @ J_in @ DR.T, J_out

    def poisson_map_check(self, map_fn: VectorMap,
                          bracket_in: Callable[[Sequence[Any]], ProductBracket],
                          bracket_out: Callable[[Sequence[Any]], ProductBracket],
                          point: Sequence[Any]) -> bool:
        lhs, rhs = self.poisson_map_sides(map_fn, bracket_in, bracket_out, point)
        return self.equal_arrays(lhs, rhs)

    @staticmethod
    def casimir_gradients(A: Mat2, B: Mat2) -> Tuple[Tuple[Any, ...], Tuple[Any, ...]]:
        """grad f0 = (a4, -a3, -a2, a1), grad f1 = (b4, -b3, -b2, b1)"""
        return ((A.a4, -A.a3, -A.a2, A.a1), (B.a4, -B.a3, -B.a2, B.a1))

    def casimir_residuals(self, A: Mat2, B: Mat2, gradient: Sequence[Any]) -> List[Any]:
        """J_B(A) . gradient"""
        return list(self.structure_matrix(A, B) @ np.array(gradient, dtype=object))

    def casimir_check(self, A: Mat2, B: Mat2) -> bool:
        for gradient in self.casimir_gradients(A, B):
            if not all(self.field.is_zero(r) for r in self.casimir_residuals(A, B, gradient)):
                return False
        return True

    def _structure_derivatives(self, structure: StructureFn, A: Mat2) -> List[np.ndarray]:
        zero, one = self.field.zero(), self.field.one()
        derivatives = []
        for l in range(4):
            seeded = Mat2.from_entries([DualScalar(a, one if k == l else zero)
                                        for k, a in enumerate(A.entries)])
            J = structure(seeded)
            derivatives.append(np.vectorize(lambda x: derivative_part(x, zero), otypes=[object])(J))
        return derivatives

    def jacobi_check(self, B: Mat2, A: Mat2, structure: Optional[StructureFn] = None) -> bool:
        """Antisymmetry and the Jacobi identity of J at A"""
        if structure is None:
            def structure(M: Mat2) -> np.ndarray:
                return self.structure_matrix(M, B)
        J = structure(A)
        if not all(self.field.is_zero(J[i, j] + J[j, i]) for i in range(4) for j in range(4)):
            return False
        dJ = self._structure_derivatives(structure, A)
        for i, j, k in combinations(range(4), 3):
            total = self.field.zero()
            for l in range(4):
                total = (total + J[i, l] * dJ[l][j, k]
                         + J[j, l] * dJ[l][k, i] + J[k, l] * dJ[l][i, j])
            if not self.field.is_zero(total):
                return False
        return True

    def lie_structure_constants(self, B: Mat2) -> LieStructure:
        b1, b2, b3, b4 = B.entries
        zero = b1 * 0
        return LieStructure(
            constants={
                (1, 2): (b2, -b1, zero, zero),
                (1, 3): (-b3, zero, b1, zero),
                (1, 4): (zero, -b3, b2, zero),
                (2, 3): (-b4, zero, zero, b1),
                (2, 4): (zero, -b4, zero, b2),
                (3, 4): (zero, zero, b4, -b3),
            },
            zero=zero,
        )

    def linearized_constants(self, B: Mat2) -> LieStructure:
        """Constants read off J_B at the unit matrices E_1..E_4"""
        zero, one = self.field.zero(), self.field.one()
        units = [Mat2.from_entries([one if k == l else zero for k in range(4)]) for l in range(4)]
        matrices = [self.structure_matrix(E, B) for E in units]
        return LieStructure(
            constants={(i + 1, j + 1): tuple(J[i, j] for J in matrices)
                       for i, j in combinations(range(4), 2)},
            zero=zero,
        )
