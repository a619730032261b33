#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
Leaf Chart Entities for PyYBMaps

A chart parameterizes a Casimir level set of L_B: some entries of A are
free coordinates, the remaining pivot entries are resolved from the level
values of f0 and/or f1. A chart may carry a frame P, in which case it
describes the level set for P B0 P^-1 by conjugating the base chart.
"""

from dataclasses import dataclass, field as dataclass_field, replace
from typing import Any, Callable, Optional, Sequence, Tuple

from .mat2 import Mat2, conjugate
from .pencil import invariants
from .scalars import value_part
from ..errors import BranchCut, ChartSingular, DivisionByZero

Resolver = Callable[[Sequence[Any], Sequence[Any], Mat2], Tuple[Any, ...]]

ENTRY_NAMES = ("a1", "a2", "a3", "a4")


@dataclass(frozen=True)
class ParamPoint:
    """Chart coordinates plus the level parameters that ride along"""

    coords: Tuple[Any, ...]
    params: Tuple[Any, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        object.__setattr__(self, "params", tuple(self.params))

    def with_coords(self, coords: Sequence[Any]) -> 'ParamPoint':
        return ParamPoint(tuple(coords), self.params)


def _divide(numerator: Any, denominator: Any, what: str) -> Any:
    try:
        return numerator * denominator.inverse()
    except DivisionByZero:
        raise ChartSingular(f"{what} vanishes") from None


def resolve_lower_row(coords: Sequence[Any], levels: Sequence[Any], B: Mat2) -> Tuple[Any, Any]:
    """(a3, a4) from f0 = c1, f1 = c2; the system determinant is {a1, a2}"""
    a1, a2 = coords
    c1, c2 = levels
    b1, b2, b3, b4 = B.entries
    rhs = c2 - a1 * b4 + a2 * b3
    det = a1 * b2 - a2 * b1
    a3 = _divide(c1 * b1 - a1 * rhs, det, "a1*b2 - a2*b1")
    a4 = _divide(b2 * c1 - a2 * rhs, det, "a1*b2 - a2*b1")
    return a3, a4


def resolve_off_diagonal(coords: Sequence[Any], levels: Sequence[Any], B: Mat2) -> Tuple[Any, Any]:
    """(a3, a2) from f1 = c2 then f0 = c1, for upper triangular B with b2 != 0"""
    a1, a4 = coords
    c1, c2 = levels
    b1, b2, _, b4 = B.entries
    a3 = _divide(a1 * b4 + a4 * b1 - c2, b2, "b2")
    a2 = _divide(a1 * a4 - c1, a3, "a3")
    return a3, a2


def resolve_diagonal_root(coords: Sequence[Any], levels: Sequence[Any], B: Mat2) -> Tuple[Any, Any]:
    """(a1, a4) for diagonal B; a1 is the root of b4*a1^2 - c2*a1 + b1*k = 0
    that stays finite as b4 -> 0, written as 2*b1*k / (c2 + sqrt(c2^2 - 4*b1*b4*k))."""
    a2, a3 = coords
    c1, c2 = levels
    b1, _, _, b4 = B.entries
    k = c1 + a2 * a3
    radicand = c2 * c2 - 4 * b1 * b4 * k
    base = complex(value_part(radicand).to_complex())
    if base == 0 or (base.imag == 0 and base.real < 0):
        raise BranchCut(f"radicand {base} on the branch cut")
    denominator = c2 + radicand.sqrt()
    try:
        a1 = 2 * b1 * k * denominator.inverse()
    except DivisionByZero:
        raise BranchCut("c2 + sqrt(radicand) vanishes") from None
    a4 = _divide(c2 - a1 * b4, b1, "b1")
    return a1, a4


def resolve_last_from_f0(coords: Sequence[Any], levels: Sequence[Any], B: Mat2) -> Tuple[Any]:
    """a4 = (c + a2*a3) / a1"""
    a1, a2, a3 = coords
    (c,) = levels
    return (_divide(c + a2 * a3, a1, "a1"),)


def resolve_last_from_f1(coords: Sequence[Any], levels: Sequence[Any], B: Mat2) -> Tuple[Any]:
    """a4 = (c - a1*b4 + a3*b2 + a2*b3) / b1"""
    a1, a2, a3 = coords
    (c,) = levels
    b1, b2, b3, b4 = B.entries
    return (_divide(c - a1 * b4 + a3 * b2 + a2 * b3, b1, "b1"),)


@dataclass(frozen=True)
class LeafChart:
    """Level-set chart of L_B for the Casimirs named in `casimirs`"""

    name: str
    base_B: Mat2
    coordinates: Tuple[int, ...]
    pivots: Tuple[int, ...]
    casimirs: Tuple[str, ...]
    resolver: Resolver = dataclass_field(compare=False)
    pinned_levels: Tuple[Optional[Any], ...] = ()
    frame: Optional[Mat2] = None
    exact: bool = True
    description: str = ""

    def __post_init__(self):
        if sorted(self.coordinates + self.pivots) != [0, 1, 2, 3]:
            raise ValueError(f"Chart {self.name}: coordinates and pivots must cover a1..a4")
        if not self.pinned_levels:
            object.__setattr__(self, "pinned_levels", (None,) * len(self.casimirs))
        if len(self.pinned_levels) != len(self.casimirs):
            raise ValueError(f"Chart {self.name}: one pinned slot per Casimir")

    @property
    def B(self) -> Mat2:
        if self.frame is None:
            return self.base_B
        return conjugate(self.frame, self.base_B)

    @property
    def dimension(self) -> int:
        return len(self.coordinates)

    @property
    def parameter_count(self) -> int:
        return sum(1 for pinned in self.pinned_levels if pinned is None)

    @property
    def coordinate_names(self) -> Tuple[str, ...]:
        return tuple(ENTRY_NAMES[i] for i in self.coordinates)

    def levels_for(self, params: Sequence[Any], field) -> Tuple[Any, ...]:
        """Full level tuple: pinned values first filled in, params in the free slots"""
        if len(params) != self.parameter_count:
            raise ValueError(f"Chart {self.name} takes {self.parameter_count} parameters, got {len(params)}")
        free = iter(params)
        return tuple(next(free) if pinned is None else field.lift(pinned) for pinned in self.pinned_levels)

    def levels_of(self, A: Mat2) -> Tuple[Any, ...]:
        f = invariants(A, self.B)
        values = {"f0": f.f0, "f1": f.f1}
        return tuple(values[c] for c in self.casimirs)

    def embed_base(self, point: ParamPoint, field) -> Mat2:
        levels = self.levels_for(point.params, field)
        pivot_values = self.resolver(point.coords, levels, self.base_B)
        entries = [None] * 4
        for index, value in zip(self.coordinates, point.coords):
            entries[index] = value
        for index, value in zip(self.pivots, pivot_values):
            entries[index] = value
        return Mat2.from_entries(entries)

    def embed(self, point: ParamPoint, field) -> Mat2:
        base = self.embed_base(point, field)
        if self.frame is None:
            return base
        return conjugate(self.frame, base)

    def project(self, A: Mat2) -> Tuple[Any, ...]:
        if self.frame is not None:
            A = self.frame.inverse() @ A @ self.frame
        entries = A.entries
        return tuple(entries[i] for i in self.coordinates)

    def transported(self, P: Mat2, name: Optional[str] = None) -> 'LeafChart':
        """Same chart in the frame P: B becomes P B P^-1"""
        P.inverse()  # raises SingularMatrix for det P = 0
        frame = P if self.frame is None else P @ self.frame
        return replace(self, frame=frame, name=name or f"{self.name}~P")
