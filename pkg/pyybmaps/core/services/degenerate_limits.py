#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
Degenerate Limit Services for PyYBMaps

The eps-families B = diag(1, eps) and B = [[eps, 1], [0, eps]] with levels
f0 = c, f1 = 1, their eps -> 0 limits (the Adler-Yamilov map and the lift
of the KdV quad-graph equation), the squeeze down to the quad-graph
equation itself and the degenerate Lax matrices of the limits.
"""

import logging
import math
from typing import Any, Callable, List, Optional, Sequence, Tuple

import numpy as np

from ..entities.degenerate import DegenerateLaxReport, LimitReport, QuadGraphReduction
from ..entities.leaf_chart import ParamPoint
from ..entities.mat2 import Mat2
from ..entities.pencil import MatrixPencil, pencil_product_equal
from ..entities.scalars import FieldScalar
from ..errors import BackendUnsupported, DivisionByZero, PoleEncountered, SqueezeViolated
from .leaf_reduction import LeafReductionService, ay_family_chart, kdv_family_chart

logger = logging.getLogger(__name__)

Pair = Tuple[Any, Any]
DEFAULT_SCHEDULE = (1e-3, 1e-4, 1e-5, 1e-6, 1e-7)


def _reciprocal(value: Any, what: str) -> Any:
    try:
        return value.inverse()
    except DivisionByZero:
        raise PoleEncountered(f"{what} = 0") from None


class DegenerateLimitsService:
    """Service for the eps-families and their closed-form limits"""

    def __init__(self, field, leaf_reduction: Optional[LeafReductionService] = None):
        self.field = field
        self.leaf_reduction = leaf_reduction or LeafReductionService(field)

    def _lift(self, c: Any) -> Any:
        return c if isinstance(c, FieldScalar) else self.field.lift(c)

    def _lift_pair(self, p: Sequence[Any]) -> Pair:
        return tuple(self._lift(c) for c in p)

    def ay_family_map(self, x: Sequence[Any], y: Sequence[Any], alpha: Any, beta: Any,
                      epsilon: Any) -> Tuple[Pair, Pair]:
        """Reduced R_B for B = diag(1, eps); float backend only"""
        if self.field.exact:
            raise BackendUnsupported("the Adler-Yamilov family needs a square root")
        chart = ay_family_chart(self.field, epsilon)
        u, v = self.leaf_reduction.reduced_map(
            chart,
            ParamPoint(self._lift_pair(x), (self._lift(alpha),)),
            ParamPoint(self._lift_pair(y), (self._lift(beta),)),
        )
        return u.coords, v.coords

    def adler_yamilov_map(self, x: Sequence[Any], y: Sequence[Any], alpha: Any, beta: Any) -> Tuple[Pair, Pair]:
        x1, x2 = self._lift_pair(x)
        y1, y2 = self._lift_pair(y)
        shift = (self._lift(alpha) - self._lift(beta)) * _reciprocal(1 + x1 * y2, "1 + x1*y2")
        return (y1 - shift * x1, y2), (x1, x2 + shift * y2)

    def kdv_family_map(self, x: Sequence[Any], y: Sequence[Any], alpha: Any, beta: Any,
                       epsilon: Any) -> Tuple[Pair, Pair]:
        """Reduced R_B for B = [[eps, 1], [0, eps]]; rational, runs on both backends"""
        chart = kdv_family_chart(self.field, epsilon)
        u, v = self.leaf_reduction.reduced_map(
            chart,
            ParamPoint(self._lift_pair(x), (self._lift(alpha),)),
            ParamPoint(self._lift_pair(y), (self._lift(beta),)),
        )
        return u.coords, v.coords

    def kdv_lift_map(self, x: Sequence[Any], y: Sequence[Any], alpha: Any, beta: Any) -> Tuple[Pair, Pair]:
        x1, x2 = self._lift_pair(x)
        y1, y2 = self._lift_pair(y)
        shift = (self._lift(alpha) - self._lift(beta)) * _reciprocal(x1 + y2, "x1 + y2")
        return (y1 + shift, y2), (x1, x2 - shift)

    @staticmethod
    def _flatten(value: Any) -> List[complex]:
        if isinstance(value, (tuple, list)):
            return [c for item in value for c in DegenerateLimitsService._flatten(item)]
        return [value.to_complex()]

    def limit_convergence_check(self, family: Callable[[float], Any], closed_form: Any,
                                schedule: Sequence[float] = DEFAULT_SCHEDULE,
                                tolerance: float = 1e-6, min_order: float = 0.8,
                                noise_floor: float = 1e-7) -> LimitReport:
        """Max-coordinate error of family(eps) against the limit along the schedule

        Errors at or below noise_floor count as converged: they may fluctuate
        with roundoff and are left out of the order fit.
        """
        schedule = list(schedule)
        if any(e <= 0 for e in schedule) or any(b >= a for a, b in zip(schedule, schedule[1:])):
            raise ValueError("schedule must be strictly decreasing positive values")
        target = self._flatten(closed_form)
        errors = []
        for eps in schedule:
            values = self._flatten(family(eps))
            errors.append(max(abs(a - b) for a, b in zip(values, target)))
        monotone = all(later < earlier or later <= noise_floor
                       for earlier, later in zip(errors, errors[1:]))
        positive = [(e, err) for e, err in zip(schedule, errors) if err > noise_floor]
        order = None
        if len(positive) >= 2:
            logs = np.log([p[0] for p in positive]), np.log([p[1] for p in positive])
            order = float(np.polyfit(logs[0], logs[1], 1)[0])
        final_error = errors[-1]
        passed = (monotone and (order is None or order >= min_order)
                  and final_error <= tolerance
                  and not any(math.isnan(err) for err in errors))
        logger.debug("limit errors %s, order %s", errors, order)
        return LimitReport(schedule=schedule, errors=errors, order=order, final_error=final_error,
                           tolerance=tolerance, min_order=min_order, monotone=monotone, passed=passed)

    def kdv_quadgraph_reduce(self, x: Sequence[Any], y: Sequence[Any], alpha: Any, beta: Any) -> QuadGraphReduction:
        """Squeeze the sign-changed KdV lift; inputs are in the sign-changed coordinates"""
        x1, x2 = self._lift_pair(x)
        y1, y2 = self._lift_pair(y)
        if not self.field.equal(y1, x2):
            raise SqueezeViolated(f"squeeze needs y1 = x2, got y1 = {y1}, x2 = {x2}")
        # x2, y2 flip sign on the way in, u2, v2 on the way out
        (u1, u2), (v1, v2) = self.kdv_lift_map((x1, -x2), (y1, -y2), alpha, beta)
        f, f1, f2, f12 = y1, x1, y2, u1
        if not self.field.equal(f12, -v2):
            raise SqueezeViolated("u1 and v2 disagree after the squeeze")
        residual = (f12 - f) * (f1 - f2) - (self._lift(alpha) - self._lift(beta))
        return QuadGraphReduction(f=f, f1=f1, f2=f2, f12=f12, residual=residual)

    def degenerate_lax_matrix(self, which: str, a: Sequence[Any], c: Any) -> MatrixPencil:
        """L1 = [[a1a2 + c, a1], [a2, 1]] - z diag(1, 0); L2 = [[a1, c - a1a2], [-1, a2]] - z E12"""
        a1, a2 = self._lift_pair(a)
        c = self._lift(c)
        zero, one = self.field.zero(), self.field.one()
        if which == "L1":
            return MatrixPencil(Mat2(a1 * a2 + c, a1, a2, one), Mat2(one, zero, zero, zero))
        if which == "L2":
            return MatrixPencil(Mat2(a1, c - a1 * a2, -one, a2), Mat2(zero, one, zero, zero))
        raise ValueError(f"Unknown degenerate Lax matrix {which!r}, expected L1 or L2")

    def degenerate_lax_holds(self, which: str, x: Pair, y: Pair, u: Pair, v: Pair,
                             alpha: Any, beta: Any) -> bool:
        L = self.degenerate_lax_matrix
        return pencil_product_equal(L(which, u, alpha), L(which, v, beta),
                                    L(which, y, beta), L(which, x, alpha), self.field)

    def degenerate_lax_check(self, which: str, x: Sequence[Any], y: Sequence[Any],
                             alpha: Any, beta: Any) -> DegenerateLaxReport:
        """The limit map solves its degenerate Lax equation; for L2 a second solution is exhibited"""
        x, y = self._lift_pair(x), self._lift_pair(y)
        if which == "L1":
            u, v = self.adler_yamilov_map(x, y, alpha, beta)
        elif which == "L2":
            u, v = self.kdv_lift_map(x, y, alpha, beta)
        else:
            raise ValueError(f"Unknown degenerate Lax matrix {which!r}, expected L1 or L2")
        report = DegenerateLaxReport(
            which=which,
            image=(u, v),
            image_satisfies=self.degenerate_lax_holds(which, x, y, u, v, alpha, beta),
        )
        if which == "L2":
            # only u1, v2 and the sum u2 + v1 are fixed by the L2 equation
            alt_u, alt_v = (u[0], x[0]), (y[1], v[1])
            report.alternative = (alt_u, alt_v)
            report.alternative_satisfies = self.degenerate_lax_holds(which, x, y, alt_u, alt_v, alpha, beta)
            report.swap_satisfies = self.degenerate_lax_holds(which, x, y, y, x, alpha, beta)
            if report.alternative_satisfies and not report.non_unique:
                report.notes.append("x1 = y2: the second solution coincides with the map image")
        return report
