#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
Yang-Baxter Verification Services for PyYBMaps
"""

from typing import Any, Callable, Optional, Sequence, Tuple

from ..entities.leaf_chart import ParamPoint
from ..entities.mat2 import Mat2

# (x, y, p, q) -> (u, v); p, q are the parameters of the two factors or None
PairMap = Callable[[Any, Any, Any, Any], Tuple[Any, Any]]
Triple = Tuple[Any, Any, Any]


class YangBaxterVerifier:
    """Service comparing the two composition orders around the YB cube"""

    def __init__(self, field):
        self.field = field

    def elements_equal(self, a: Any, b: Any) -> bool:
        if isinstance(a, Mat2) and isinstance(b, Mat2):
            return a.equals(b, self.field)
        if isinstance(a, ParamPoint) and isinstance(b, ParamPoint):
            return (self.elements_equal(a.coords, b.coords)
                    and self.elements_equal(a.params, b.params))
        if isinstance(a, (tuple, list)) and isinstance(b, (tuple, list)):
            return len(a) == len(b) and all(self.elements_equal(p, q) for p, q in zip(a, b))
        return self.field.equal(a, b)

    @staticmethod
    def yb_cube_sides(map_fn: PairMap, x: Any, y: Any, z: Any,
                      params: Optional[Sequence[Any]] = None) -> Tuple[Triple, Triple]:
        """(R23 R13 R12 (x, y, z), R12 R13 R23 (x, y, z))"""
        a, b, c = params if params is not None else (None, None, None)

        # R12 first: x', y'; then R13: x'', z'; then R23: y'', z''
        x1, y1 = map_fn(x, y, a, b)
        x2, z1 = map_fn(x1, z, a, c)
        y2, z2 = map_fn(y1, z1, b, c)
        lhs = (x2, y2, z2)

        # R23 first: the tilde chain
        y_t, z_t = map_fn(y, z, b, c)
        x_t, z_tt = map_fn(x, z_t, a, c)
        x_tt, y_tt = map_fn(x_t, y_t, a, b)
        rhs = (x_tt, y_tt, z_tt)
        return lhs, rhs

    def yb_cube_check(self, map_fn: PairMap, x: Any, y: Any, z: Any,
                      params: Optional[Sequence[Any]] = None) -> bool:
        lhs, rhs = self.yb_cube_sides(map_fn, x, y, z, params)
        return self.elements_equal(lhs, rhs)
