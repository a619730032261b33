#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
Map Registry for PyYBMaps

Named Yang-Baxter maps with their arity, domain predicate, backend support
and the suites that verify them. Three kinds of maps are registered:

  matrix  (X, Y) -> (U, V) on 2x2 matrices, no parameters
  chart   reduced maps on ParamPoints, parameters ride inside the points
  pair    closed-form maps on coordinate pairs with scalar parameters
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from ..core.entities.leaf_chart import ParamPoint
from ..core.entities.mat2 import Mat2
from ..core.errors import DomainError, ScalarParseError, UnknownMap
from ..core.services.leaf_reduction import chart_by_name, chart_names
from ..core.services.refactorization import RefactorizationService
from ..core.services.differentiation import VectorMap
from ..infrastructure.serialization import (
    decode_matrix,
    decode_scalar,
    decode_vector,
    encode_value,
)
from .di_container import ServiceBundle

logger = logging.getLogger(__name__)

BASE_MATRICES: Dict[str, Tuple[Tuple[int, int], Tuple[int, int]]] = {
    "identity": ((1, 0), (0, 1)),
    "diag": ((1, 0), (0, 2)),
    "jordan": ((1, 1), (0, 1)),
    "rotation": ((1, -1), (1, 1)),
}

CLOSED_FORM_MAPS = ("adler-yamilov", "kdv-lift")
FAMILY_MAPS = ("ay-family", "kdv-family")


def base_matrix(key: str, field) -> Mat2:
    try:
        return Mat2.from_rows(BASE_MATRICES[key], field)
    except KeyError:
        raise UnknownMap(f"Unknown base matrix {key!r}") from None


@dataclass(frozen=True)
class MapRegistryEntry:
    """A registered map (x, y, p, q) -> (u, v)"""

    name: str
    kind: str
    coordinate_dim: int
    parameter_dim: int
    evaluate: Callable[..., Tuple[Any, Any]]
    domain: Callable[..., bool]
    exact: bool = True
    float_ok: bool = True
    needs_epsilon: bool = False
    suites: Tuple[str, ...] = ()
    description: str = ""

    def supports(self, field) -> bool:
        return self.exact if field.exact else self.float_ok

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "kind": self.kind,
            "coordinate_dim": self.coordinate_dim,
            "parameter_dim": self.parameter_dim,
            "exact": self.exact,
            "float": self.float_ok,
            "needs_epsilon": self.needs_epsilon,
            "suites": list(self.suites),
            "description": self.description,
        }


def _domain_by_evaluation(evaluate: Callable[..., Any]) -> Callable[..., bool]:
    def domain(*args: Any) -> bool:
        try:
            evaluate(*args)
        except DomainError:
            return False
        return True
    return domain


def general_vector_map(refactorization: RefactorizationService, B: Mat2) -> VectorMap:
    """R_B on flat coordinates (x1..x4, y1..y4)"""
    def fn(flat: Sequence[Any]) -> List[Any]:
        U, V = refactorization.apply(Mat2.from_entries(flat[:4]), Mat2.from_entries(flat[4:]), B)
        return list(U.entries) + list(V.entries)
    return fn


def pair_vector_map(evaluate: Callable[..., Tuple[Any, Any]], alpha: Any, beta: Any) -> VectorMap:
    """Closed-form pair map on flat coordinates (x1, x2, y1, y2)"""
    def fn(flat: Sequence[Any]) -> List[Any]:
        u, v = evaluate(tuple(flat[:2]), tuple(flat[2:]), alpha, beta)
        return list(u) + list(v)
    return fn


def map_names() -> List[str]:
    return ([f"general-{key}" for key in BASE_MATRICES] + ["trivial"]
            + [f"reduced-{name}" for name in chart_names()]
            + list(CLOSED_FORM_MAPS) + list(FAMILY_MAPS))


def _general_entry(services: ServiceBundle, key: str) -> MapRegistryEntry:
    B = base_matrix(key, services.field)
    refactorization = services.refactorization

    def evaluate(X: Mat2, Y: Mat2, p: Any = None, q: Any = None) -> Tuple[Mat2, Mat2]:
        return refactorization.apply(X, Y, B)

    def domain(X: Mat2, Y: Mat2, p: Any = None, q: Any = None) -> bool:
        return refactorization.general_map_domain(X, Y, B)

    return MapRegistryEntry(
        name=f"general-{key}", kind="matrix", coordinate_dim=4, parameter_dim=0,
        evaluate=evaluate, domain=domain,
        suites=(f"refactor/{key}", f"yb-cube/general-{key}-B", f"poisson/general-{key}",
                f"uniqueness/{key}", f"quadrirational/{key}"),
        description=f"R_B with B = {BASE_MATRICES[key]}",
    )


def _reduced_entry(services: ServiceBundle, chart_name: str) -> MapRegistryEntry:
    chart = chart_by_name(chart_name, services.field)
    leaf_reduction = services.leaf_reduction

    def evaluate(x: ParamPoint, y: ParamPoint, p: Any = None, q: Any = None) -> Tuple[ParamPoint, ParamPoint]:
        return leaf_reduction.reduced_map(chart, x, y)

    return MapRegistryEntry(
        name=f"reduced-{chart_name}", kind="chart", coordinate_dim=chart.dimension,
        parameter_dim=chart.parameter_count, evaluate=evaluate,
        domain=_domain_by_evaluation(evaluate), exact=chart.exact,
        suites=(f"yb-cube/reduced-{chart_name}", f"poisson/reduced-{chart_name}",
                f"lax/reduced-{chart_name}", f"transport/{chart_name}"),
        description=f"R_B on the {chart_name} chart: {chart.description}",
    )


def build_map_registry(services: ServiceBundle) -> Dict[str, MapRegistryEntry]:
    """All registered maps wired to the services of one backend"""
    limits = services.limits
    registry: Dict[str, MapRegistryEntry] = {}
    for key in BASE_MATRICES:
        entry = _general_entry(services, key)
        registry[entry.name] = entry

    def trivial(x: Any, y: Any, p: Any = None, q: Any = None) -> Tuple[Any, Any]:
        return services.refactorization.trivial_branch(x, y)

    registry["trivial"] = MapRegistryEntry(
        name="trivial", kind="matrix", coordinate_dim=4, parameter_dim=0,
        evaluate=trivial, domain=lambda *args: True, suites=("yb-cube/trivial",),
        description="(X, Y) -> (Y, X)",
    )
    for chart_name in chart_names():
        entry = _reduced_entry(services, chart_name)
        registry[entry.name] = entry

    registry["adler-yamilov"] = MapRegistryEntry(
        name="adler-yamilov", kind="pair", coordinate_dim=2, parameter_dim=1,
        evaluate=limits.adler_yamilov_map, domain=_domain_by_evaluation(limits.adler_yamilov_map),
        suites=("yb-cube/adler-yamilov", "poisson/adler-yamilov", "limits/adler-yamilov",
                "lax/degenerate-l1"),
        description="eps -> 0 limit of B = diag(1, eps)",
    )
    registry["kdv-lift"] = MapRegistryEntry(
        name="kdv-lift", kind="pair", coordinate_dim=2, parameter_dim=1,
        evaluate=limits.kdv_lift_map, domain=_domain_by_evaluation(limits.kdv_lift_map),
        suites=("yb-cube/kdv-lift", "poisson/kdv-lift", "limits/kdv", "squeeze/kdv",
                "lax/degenerate-l2"),
        description="eps -> 0 limit of B = [[eps, 1], [0, eps]]",
    )
    registry["ay-family"] = MapRegistryEntry(
        name="ay-family", kind="pair", coordinate_dim=2, parameter_dim=1,
        evaluate=limits.ay_family_map, domain=_domain_by_evaluation(limits.ay_family_map),
        exact=False, needs_epsilon=True, suites=("limits/adler-yamilov",),
        description="reduced R_B for B = diag(1, eps), levels (alpha, 1)",
    )
    registry["kdv-family"] = MapRegistryEntry(
        name="kdv-family", kind="pair", coordinate_dim=2, parameter_dim=1,
        evaluate=limits.kdv_family_map, domain=_domain_by_evaluation(limits.kdv_family_map),
        needs_epsilon=True, suites=("limits/kdv", "poisson/kdv-family"),
        description="reduced R_B for B = [[eps, 1], [0, eps]], levels (alpha, 1)",
    )
    return registry


def map_by_name(name: str, registry: Mapping[str, MapRegistryEntry]) -> MapRegistryEntry:
    try:
        return registry[name]
    except KeyError:
        raise UnknownMap(f"Unknown map {name!r}, see 'catalog list'") from None


def _decode_params(data: Any, count: int, field) -> Tuple[Any, ...]:
    if data is None:
        data = []
    if not isinstance(data, (list, tuple)):
        data = [data]
    if len(data) != count:
        raise ScalarParseError(f"Expected {count} parameter value(s), got {len(data)}")
    return decode_vector(data, field)


def evaluate_from_json(entry: MapRegistryEntry, data: Mapping[str, Any], field) -> Dict[str, Any]:
    """Decode {"x", "y", "alpha", "beta", "epsilon"}, evaluate, encode the image"""
    for key in ("x", "y"):
        if key not in data:
            raise ScalarParseError(f"Map input is missing {key!r}")
    if entry.kind == "matrix":
        u, v = entry.evaluate(decode_matrix(data["x"], field), decode_matrix(data["y"], field))
    elif entry.kind == "chart":
        x = ParamPoint(decode_vector(data["x"], field), _decode_params(data.get("alpha"), entry.parameter_dim, field))
        y = ParamPoint(decode_vector(data["y"], field), _decode_params(data.get("beta"), entry.parameter_dim, field))
        u, v = entry.evaluate(x, y)
        u, v = u.coords, v.coords
    else:
        for key in ("alpha", "beta"):
            if key not in data:
                raise ScalarParseError(f"Map input is missing {key!r}")
        args = [decode_vector(data["x"], field), decode_vector(data["y"], field),
                decode_scalar(data["alpha"], field), decode_scalar(data["beta"], field)]
        if entry.needs_epsilon:
            if "epsilon" not in data:
                raise ScalarParseError(f"Map {entry.name} needs 'epsilon'")
            args.append(decode_scalar(data["epsilon"], field))
        u, v = entry.evaluate(*args)
    logger.debug("Evaluated %s", entry.name)
    return {
        "map": entry.name,
        "backend": field.name,
        "u": encode_value(u, field),
        "v": encode_value(v, field),
    }
