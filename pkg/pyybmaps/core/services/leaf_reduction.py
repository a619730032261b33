#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
Leaf Reduction Services for PyYBMaps

Restricts R_B to Casimir level sets. A chart embeds coordinates into L_B,
the general map is applied, and the result is projected back; parameters
(level values) ride along unchanged. Also provides the chart catalog of
the normal forms of B.
"""

from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..entities.leaf_chart import (
    LeafChart,
    ParamPoint,
    resolve_diagonal_root,
    resolve_last_from_f0,
    resolve_last_from_f1,
    resolve_lower_row,
    resolve_off_diagonal,
)
from ..entities.mat2 import Mat2
from ..entities.pencil import MatrixPencil, pencil_product_equal
from ..entities.scalars import value_part
from ..errors import ChartSingular, LaxEquationViolated, UnknownChart
from .differentiation import DifferentiationService, VectorMap
from .poisson import PoissonStructureService, ProductBracket
from .refactorization import RefactorizationService

BRANCH_TOLERANCE = 1e-6


class LeafReductionService:
    """Service for reduced parametric maps on symplectic leaves"""

    def __init__(self, field,
                 refactorization: Optional[RefactorizationService] = None,
                 poisson: Optional[PoissonStructureService] = None,
                 differentiation: Optional[DifferentiationService] = None):
        self.field = field
        self.differentiation = differentiation or DifferentiationService(field)
        self.refactorization = refactorization or RefactorizationService(field)
        self.poisson = poisson or PoissonStructureService(field, self.differentiation)

    def embed(self, chart: LeafChart, point: ParamPoint) -> Mat2:
        return chart.embed(point, self.field)

    def project(self, chart: LeafChart, A: Mat2, params: Sequence[Any]) -> ParamPoint:
        """Coordinates of A, checked to lie on the resolved branch of the chart"""
        point = ParamPoint(chart.project(A), tuple(params))
        again = chart.embed(point, self.field)
        check = self.field
        if not check.exact:
            # a wrong branch is off by O(1/eps)
            check = check.with_tolerance(max(check.tolerance, BRANCH_TOLERANCE))
        for original, resolved in zip(A.entries, again.entries):
            if not check.equal(value_part(original), value_part(resolved)):
                raise ChartSingular(f"{A} is not on chart {chart.name} at levels {tuple(params)}")
        return point

    def reduced_map(self, chart: LeafChart, x: ParamPoint, y: ParamPoint) -> Tuple[ParamPoint, ParamPoint]:
        X = chart.embed(x, self.field)
        Y = chart.embed(y, self.field)
        U, V = self.refactorization.apply(X, Y, chart.B)
        return self.project(chart, U, x.params), self.project(chart, V, y.params)

    def lax_identity_holds(self, chart: LeafChart, x: ParamPoint, y: ParamPoint,
                           u: ParamPoint, v: ParamPoint) -> bool:
        """L(u; a) L(v; b) = L(y; b) L(x; a) as polynomials in z"""
        B = chart.B
        embed = lambda p: MatrixPencil(chart.embed(p, self.field), B)
        return pencil_product_equal(embed(u), embed(v), embed(y), embed(x), self.field)

    def solve_lax_equation(self, chart: LeafChart, x: Sequence[Any], y: Sequence[Any],
                           alpha: Sequence[Any], beta: Sequence[Any]) -> Tuple[ParamPoint, ParamPoint]:
        """The unique solution (u, v) of the reduced Lax equation"""
        xp, yp = ParamPoint(tuple(x), tuple(alpha)), ParamPoint(tuple(y), tuple(beta))
        u, v = self.reduced_map(chart, xp, yp)
        if not self.lax_identity_holds(chart, xp, yp, u, v):
            raise LaxEquationViolated(f"Lax equation fails on chart {chart.name} at x={x}, y={y}")
        return u, v

    def conjugate_transport(self, chart: LeafChart, P: Mat2, name: Optional[str] = None) -> LeafChart:
        return chart.transported(P, name)

    def coordinate_map(self, chart: LeafChart, params: Sequence[Tuple[Any, ...]]) -> VectorMap:
        """Reduced map on flat coordinates (x..., y...) -> (u..., v...)"""
        n = chart.dimension
        alpha, beta = params

        def fn(flat: Sequence[Any]) -> List[Any]:
            u, v = self.reduced_map(chart, ParamPoint(flat[:n], alpha), ParamPoint(flat[n:], beta))
            return list(u.coords) + list(v.coords)
        return fn

    def reduced_bracket(self, chart: LeafChart, point: ParamPoint) -> np.ndarray:
        """Dq . J_B(A) . Dq^T at A = embed(point), q the chart coordinate functions"""
        A = chart.embed(point, self.field)
        J = self.poisson.structure_matrix(A, chart.B)
        _, Dq = self.differentiation.value_and_jacobian(
            lambda entries: chart.project(Mat2.from_entries(entries)), A.entries)
        return Dq @ J @ Dq.T

    def reduced_product_bracket(self, chart: LeafChart,
                                params: Sequence[Tuple[Any, ...]]) -> Callable[[Sequence[Any]], ProductBracket]:
        n = chart.dimension

        def bracket(flat: Sequence[Any]) -> ProductBracket:
            blocks = tuple(self.reduced_bracket(chart, ParamPoint(flat[k * n:(k + 1) * n], p))
                           for k, p in enumerate(params))
            return ProductBracket(blocks)
        return bracket

    def reduced_poisson_check(self, chart: LeafChart, x: ParamPoint, y: ParamPoint) -> bool:
        params = (x.params, y.params)
        bracket = self.reduced_product_bracket(chart, params)
        return self.poisson.poisson_map_check(self.coordinate_map(chart, params), bracket, bracket,
                                              list(x.coords) + list(y.coords))


def _lift_matrix(field, rows) -> Mat2:
    return Mat2.from_rows(rows, field)


def scalar_chart(field, lam: Any = 1, name: str = "scalar") -> LeafChart:
    """B = lam*I, coordinates (a1, a2), needs a2 != 0"""
    return LeafChart(name=name, base_B=_lift_matrix(field, [[lam, 0], [0, lam]]),
                     coordinates=(0, 1), pivots=(2, 3), casimirs=("f0", "f1"),
                     resolver=resolve_lower_row, description="B = lambda*I")


def diagonal_chart(field, lam1: Any = 1, lam2: Any = 2, name: str = "diag") -> LeafChart:
    return LeafChart(name=name, base_B=_lift_matrix(field, [[lam1, 0], [0, lam2]]),
                     coordinates=(0, 1), pivots=(2, 3), casimirs=("f0", "f1"),
                     resolver=resolve_lower_row, description="B = diag(lambda1, lambda2)")


def jordan_chart(field, lam: Any = 1, name: str = "jordan", pinned_levels: Tuple = ()) -> LeafChart:
    """B = [[lam, 1], [0, lam]], coordinates the diagonal (a1, a4)"""
    return LeafChart(name=name, base_B=_lift_matrix(field, [[lam, 1], [0, lam]]),
                     coordinates=(0, 3), pivots=(2, 1), casimirs=("f0", "f1"),
                     resolver=resolve_off_diagonal, pinned_levels=pinned_levels,
                     description="B = [[lambda, 1], [0, lambda]]")


def rotation_chart(field, lam1: Any = 1, lam2: Any = 1, name: str = "rotation") -> LeafChart:
    return LeafChart(name=name, base_B=_lift_matrix(field, [[lam1, -lam2], [lam2, lam1]]),
                     coordinates=(0, 1), pivots=(2, 3), casimirs=("f0", "f1"),
                     resolver=resolve_lower_row, description="B = [[lambda1, -lambda2], [lambda2, lambda1]]")


def sl2_chart(field, name: str = "sl2") -> LeafChart:
    """B = I with det A pinned to 1; the one parameter is the f1 level"""
    return LeafChart(name=name, base_B=Mat2.identity(field),
                     coordinates=(0, 1), pivots=(2, 3), casimirs=("f0", "f1"),
                     resolver=resolve_lower_row, pinned_levels=(1, None),
                     description="B = I restricted to SL2")


def one_casimir_chart(field, casimir: str, name: Optional[str] = None) -> LeafChart:
    """B = I, coordinates (a1, a2, a3), a4 resolved from f0 or from f1"""
    resolver = {"f0": resolve_last_from_f0, "f1": resolve_last_from_f1}[casimir]
    return LeafChart(name=name or f"identity-{casimir}", base_B=Mat2.identity(field),
                     coordinates=(0, 1, 2), pivots=(3,), casimirs=(casimir,),
                     resolver=resolver, description=f"B = I, level set of {casimir}")


def ay_family_chart(field, epsilon: Any) -> LeafChart:
    """B = diag(1, eps), f1 pinned to 1, coordinates (a2, a3); needs a square root"""
    return LeafChart(name="ay-family", base_B=_lift_matrix(field, [[1, 0], [0, epsilon]]),
                     coordinates=(1, 2), pivots=(0, 3), casimirs=("f0", "f1"),
                     resolver=resolve_diagonal_root, pinned_levels=(None, 1), exact=False,
                     description="B = diag(1, eps)")


def kdv_family_chart(field, epsilon: Any) -> LeafChart:
    """B = [[eps, 1], [0, eps]], f1 pinned to 1, coordinates (a1, a4)"""
    return jordan_chart(field, epsilon, name="kdv-family", pinned_levels=(None, 1))


CATALOG_BUILDERS: Dict[str, Callable[[Any], LeafChart]] = {
    "identity": lambda field: scalar_chart(field, 1, name="identity"),
    "diag": lambda field: diagonal_chart(field, 1, 2),
    "jordan": lambda field: jordan_chart(field, 1),
    "rotation": lambda field: rotation_chart(field, 1, 1),
    "sl2": sl2_chart,
    "identity-f0": lambda field: one_casimir_chart(field, "f0"),
    "identity-f1": lambda field: one_casimir_chart(field, "f1"),
}


def normal_form_catalog(field) -> List[LeafChart]:
    return [build(field) for build in CATALOG_BUILDERS.values()]


def chart_names() -> List[str]:
    return list(CATALOG_BUILDERS)


def chart_by_name(name: str, field) -> LeafChart:
    try:
        return CATALOG_BUILDERS[name](field)
    except KeyError:
        raise UnknownChart(f"Unknown chart {name!r}") from None
