#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
Differentiation Services for PyYBMaps

Exact forward-mode derivatives by one dual-scalar evaluation per input
coordinate, and central finite differences as a float oracle.
"""

from typing import Any, Callable, List, Sequence, Tuple

import numpy as np

from ..entities.scalars import DualScalar, derivative_part, value_part

VectorMap = Callable[[Sequence[Any]], Sequence[Any]]

FIVE_POINT_STEP = 1e-3


class DifferentiationService:
    """Service for Jacobians of maps built from field operations"""

    def __init__(self, field):
        self.field = field

    def derivative_of(self, f: Callable[[Any], Any], x0: Any) -> Any:
        """f'(x0) from f(x0 + 1*eps)"""
        x0 = self.field.lift(x0)
        return derivative_part(f(DualScalar(x0, self.field.one())), self.field.zero())

    def value_and_jacobian(self, fn: VectorMap, point: Sequence[Any]) -> Tuple[List[Any], np.ndarray]:
        """fn(point) and its Jacobian as an object array, rows = outputs"""
        zero, one = self.field.zero(), self.field.one()
        point = [self.field.lift(p) for p in point]
        values: List[Any] = []
        jacobian = None
        for column in range(len(point)):
            seeded = [DualScalar(p, one if k == column else zero) for k, p in enumerate(point)]
            outputs = list(fn(seeded))
            if jacobian is None:
                jacobian = np.empty((len(outputs), len(point)), dtype=object)
                values = [value_part(y) for y in outputs]
            for row, y in enumerate(outputs):
                jacobian[row, column] = derivative_part(y, zero)
        return values, jacobian

    def map_jacobian(self, fn: VectorMap, point: Sequence[Any]) -> np.ndarray:
        return self.value_and_jacobian(fn, point)[1]

    def central_difference(self, f: Callable[[Any], Any], x0: Any, h: float = 1e-6) -> Any:
        x0 = self.field.lift(x0)
        return (f(x0 + h) - f(x0 - h)) / (2 * h)

    def finite_difference_jacobian(self, fn: VectorMap, point: Sequence[Any],
                                   h: float = FIVE_POINT_STEP) -> np.ndarray:
        """Five-point central differences, truncation error O(h^4)"""
        point = [self.field.lift(p) for p in point]
        columns = []
        for column in range(len(point)):
            def shifted(k: int) -> List[Any]:
                moved = list(point)
                moved[column] = point[column] + k * h
                return list(fn(moved))
            far_minus, minus, plus, far_plus = shifted(-2), shifted(-1), shifted(1), shifted(2)
            columns.append([(fm - 8 * m + 8 * p - fp) / (12 * h)
                            for fm, m, p, fp in zip(far_minus, minus, plus, far_plus)])
        return np.array(columns, dtype=object).T
