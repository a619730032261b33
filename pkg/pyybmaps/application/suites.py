#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
Verification Suites for PyYBMaps

A suite is a named trial function plus a default trial count. A trial
draws its own instance from the rng it is handed, checks one identity and
returns a TrialOutcome. Raising a DomainError means the instance fell
outside the domain of the map; the runner counts it as a rejection.
"""

import random
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from ..core.entities.leaf_chart import ParamPoint
from ..core.entities.mat2 import Mat2, conjugate, mat_inverse
from ..core.entities.pencil import f1_trace_form, invariants
from ..core.errors import DomainError, PoleEncountered, UnknownSuite
from ..core.services.differentiation import FIVE_POINT_STEP
from ..core.services.leaf_reduction import chart_by_name, chart_names
from ..core.services.poisson import ProductBracket
from ..core.services.sampling import derive_seed
from .di_container import ServiceBundle
from .map_registry import BASE_MATRICES, base_matrix, general_vector_map, pair_vector_map

FRAMES_PER_BASE = 3
KDV_FAMILY_EPSILON = "1/10"
FINITE_DIFFERENCE_TOLERANCE = 1e-6
DUAL_DERIVATIVE_TOLERANCE = 1e-6
LIMIT_GRID = (-0.5, -0.25, 0.0, 0.25, 0.5)


@dataclass
class TrialOutcome:
    """Result of one accepted trial; values are encoded only on failure"""

    passed: bool
    inputs: Any = None
    lhs: Any = None
    rhs: Any = None
    message: str = ""


@dataclass
class TrialContext:
    suite: str
    index: int
    seed: int
    rng: random.Random
    services: ServiceBundle

    @property
    def field(self):
        return self.services.field

    def pair(self) -> tuple:
        return self.services.sampler.vector(self.rng, 2)

    def scalar(self) -> Any:
        return self.services.sampler.gaussian_integer(self.rng)

    def matrix(self) -> Mat2:
        return self.services.sampler.matrix(self.rng)

    def point(self, chart) -> ParamPoint:
        sampler = self.services.sampler
        return ParamPoint(sampler.vector(self.rng, chart.dimension),
                          sampler.vector(self.rng, chart.parameter_count))


TrialFn = Callable[[TrialContext], TrialOutcome]


@dataclass(frozen=True)
class Suite:
    name: str
    default_trials: int
    trial: TrialFn
    backend: Optional[str] = None  # forced backend, None = the run's backend
    description: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "default_trials": self.default_trials,
                "backend": self.backend, "description": self.description}


class SuiteCatalogue:
    """Suites addressable by name"""

    def __init__(self):
        self._suites: Dict[str, Suite] = {}

    def register(self, suite: Suite) -> None:
        if suite.name in self._suites:
            raise ValueError(f"Suite {suite.name!r} registered twice")
        self._suites[suite.name] = suite

    def get(self, name: str) -> Suite:
        try:
            return self._suites[name]
        except KeyError:
            raise UnknownSuite(f"Unknown suite {name!r}, see 'catalog list'") from None

    def names(self) -> List[str]:
        return list(self._suites)

    def __contains__(self, name: str) -> bool:
        return name in self._suites

    def __len__(self) -> int:
        return len(self._suites)


def _frame(ctx: TrialContext, key: str, slot: int) -> Mat2:
    """One of the fixed conjugating matrices of a suite, shared by all its trials"""
    rng = random.Random(derive_seed(ctx.seed, ctx.suite, "frame", key, slot))
    return ctx.services.sampler.invertible_matrix(rng)


# re-factorization


def refactor_trial(key: str) -> TrialFn:
    """Factorization identity, invariant transfer and charpoly of U B^-1 = charpoly of X B^-1;
    B cycles through the base matrix and FRAMES_PER_BASE conjugates of it"""
    def trial(ctx: TrialContext) -> TrialOutcome:
        s = ctx.services
        B = base_matrix(key, s.field)
        slot = ctx.index % (FRAMES_PER_BASE + 1)
        if slot:
            B = conjugate(_frame(ctx, key, slot), B)
        X, Y = ctx.matrix(), ctx.matrix()
        result = s.refactorization.refactor(X, Y, B)
        U, V = result.pair
        B_inv = B.inverse()
        similar = (s.field.equal((U @ B_inv).trace(), (X @ B_inv).trace())
                   and s.field.equal((U @ B_inv).det(), (X @ B_inv).det()))
        passed = s.refactorization.verify(X, Y, B, result) and similar
        return TrialOutcome(passed, {"B": B, "X": X, "Y": Y},
                            lhs={"UV": U @ V, "UB+BV": U @ B + B @ V},
                            rhs={"YX": Y @ X, "YB+BX": Y @ B + B @ X},
                            message="" if similar else "charpoly of U B^-1 differs from X B^-1")
    return trial


def uniqueness_trial(key: str) -> TrialFn:
    def trial(ctx: TrialContext) -> TrialOutcome:
        s = ctx.services
        B = base_matrix(key, s.field)
        X, Y, Z = s.sampler.matrix_triple(ctx.rng)
        rebuilt = s.refactorization.reconstruct_first_factor(X, Y, Z, B)
        return TrialOutcome(rebuilt.equals(X, s.field), {"X": X, "Y": Y, "Z": Z}, lhs=rebuilt, rhs=X)
    return trial


def quadrirational_trial(key: str) -> TrialFn:
    """inverse_refactor undoes refactor"""
    def trial(ctx: TrialContext) -> TrialOutcome:
        s = ctx.services
        B = base_matrix(key, s.field)
        X, Y = ctx.matrix(), ctx.matrix()
        U, V = s.refactorization.apply(X, Y, B)
        X_back, V_back = s.refactorization.inverse_refactor(U, Y, B)
        passed = X_back.equals(X, s.field) and V_back.equals(V, s.field)
        return TrialOutcome(passed, {"X": X, "Y": Y}, lhs=(X_back, V_back), rhs=(X, V))
    return trial


# Yang-Baxter cube


def _cube_outcome(ctx: TrialContext, map_fn, x, y, z, params=None) -> TrialOutcome:
    verifier = ctx.services.verifier
    lhs, rhs = verifier.yb_cube_sides(map_fn, x, y, z, params)
    inputs = {"x": x, "y": y, "z": z}
    if params is not None:
        inputs["params"] = params
    return TrialOutcome(verifier.elements_equal(lhs, rhs), inputs, lhs=lhs, rhs=rhs)


def general_cube_trial(key: str) -> TrialFn:
    def trial(ctx: TrialContext) -> TrialOutcome:
        s = ctx.services
        B = base_matrix(key, s.field)
        X, Y, Z = s.sampler.matrix_triple(ctx.rng)
        return _cube_outcome(ctx, lambda x, y, p, q: s.refactorization.apply(x, y, B), X, Y, Z)
    return trial


def trivial_cube_trial(ctx: TrialContext) -> TrialOutcome:
    X, Y, Z = ctx.services.sampler.matrix_triple(ctx.rng)
    trivial = ctx.services.refactorization.trivial_branch
    return _cube_outcome(ctx, lambda x, y, p, q: trivial(x, y), X, Y, Z)


def reduced_cube_trial(chart_name: str) -> TrialFn:
    def trial(ctx: TrialContext) -> TrialOutcome:
        s = ctx.services
        chart = chart_by_name(chart_name, s.field)
        x, y, z = ctx.point(chart), ctx.point(chart), ctx.point(chart)
        return _cube_outcome(ctx, lambda a, b, p, q: s.leaf_reduction.reduced_map(chart, a, b), x, y, z)
    return trial


def closed_form_cube_trial(map_name: str) -> TrialFn:
    def trial(ctx: TrialContext) -> TrialOutcome:
        evaluate = _closed_form(ctx.services, map_name)
        x, y, z = ctx.pair(), ctx.pair(), ctx.pair()
        params = (ctx.scalar(), ctx.scalar(), ctx.scalar())
        return _cube_outcome(ctx, evaluate, x, y, z, params)
    return trial


def _closed_form(services: ServiceBundle, map_name: str):
    return {"adler-yamilov": services.limits.adler_yamilov_map,
            "kdv-lift": services.limits.kdv_lift_map}[map_name]


# Poisson property


def poisson_general_trial(key: str) -> TrialFn:
    """DR . J . DR^T = J o R for the product Sklyanin bracket"""
    def trial(ctx: TrialContext) -> TrialOutcome:
        s = ctx.services
        B = base_matrix(key, s.field)
        X, Y = ctx.matrix(), ctx.matrix()
        bracket = s.poisson.general_bracket(B)
        lhs, rhs = s.poisson.poisson_map_sides(general_vector_map(s.refactorization, B), bracket, bracket,
                                               list(X.entries) + list(Y.entries))
        return TrialOutcome(s.poisson.equal_arrays(lhs, rhs), {"B": B, "X": X, "Y": Y}, lhs=lhs, rhs=rhs)
    return trial


def poisson_reduced_trial(chart_name: str) -> TrialFn:
    def trial(ctx: TrialContext) -> TrialOutcome:
        s = ctx.services
        chart = chart_by_name(chart_name, s.field)
        x, y = ctx.point(chart), ctx.point(chart)
        return TrialOutcome(s.leaf_reduction.reduced_poisson_check(chart, x, y), {"x": x, "y": y})
    return trial


def poisson_closed_form_trial(map_name: str, sign: int) -> TrialFn:
    """Closed-form maps preserve the constant bracket {x1, x2} = {y1, y2} = sign"""
    def trial(ctx: TrialContext) -> TrialOutcome:
        s = ctx.services
        alpha, beta = ctx.scalar(), ctx.scalar()
        point = list(ctx.pair()) + list(ctx.pair())
        bracket = s.poisson.constant_bracket(s.poisson.canonical_block(sign))
        lhs, rhs = s.poisson.poisson_map_sides(pair_vector_map(_closed_form(s, map_name), alpha, beta),
                                               bracket, bracket, point)
        return TrialOutcome(s.poisson.equal_arrays(lhs, rhs),
                            {"point": point, "alpha": alpha, "beta": beta}, lhs=lhs, rhs=rhs)
    return trial


def kdv_family_bracket(field, epsilon: Any) -> Callable[[List[Any]], ProductBracket]:
    """{x1, x2} = -1 + eps*(x1 + x2) on each factor"""
    zero = field.zero()

    def bracket(flat: List[Any]) -> ProductBracket:
        blocks = []
        for k in range(2):
            s = epsilon * (flat[2 * k] + flat[2 * k + 1]) - 1
            blocks.append(np.array([[zero, s], [-s, zero]], dtype=object))
        return ProductBracket(tuple(blocks))
    return bracket


def poisson_kdv_family_trial(ctx: TrialContext) -> TrialOutcome:
    s = ctx.services
    epsilon = s.field.lift(KDV_FAMILY_EPSILON)
    alpha, beta = ctx.scalar(), ctx.scalar()
    point = list(ctx.pair()) + list(ctx.pair())

    def family(x, y, a, b):
        return s.limits.kdv_family_map(x, y, a, b, epsilon)

    bracket = kdv_family_bracket(s.field, epsilon)
    lhs, rhs = s.poisson.poisson_map_sides(pair_vector_map(family, alpha, beta), bracket, bracket, point)
    return TrialOutcome(s.poisson.equal_arrays(lhs, rhs),
                        {"point": point, "alpha": alpha, "beta": beta, "epsilon": epsilon},
                        lhs=lhs, rhs=rhs)


def finite_difference_trial(ctx: TrialContext) -> TrialOutcome:
    """Dual-number Jacobian of R_B against five-point differences

    Points where halving the step moves the differences by more than the
    tolerance sit too close to a pole for differencing and are rejected.
    """
    s = ctx.services
    key = list(BASE_MATRICES)[ctx.index % len(BASE_MATRICES)]
    B = base_matrix(key, s.field)
    X, Y = ctx.matrix(), ctx.matrix()
    fn = general_vector_map(s.refactorization, B)
    point = list(X.entries) + list(Y.entries)
    exact = s.differentiation.map_jacobian(fn, point)
    approximate = s.differentiation.finite_difference_jacobian(fn, point)
    finer = s.differentiation.finite_difference_jacobian(fn, point, h=FIVE_POINT_STEP / 2)
    loose = s.field.with_tolerance(FINITE_DIFFERENCE_TOLERANCE)
    if not all(loose.equal(a, b) for a, b in zip(approximate.flat, finer.flat)):
        raise PoleEncountered("finite differences do not settle at this point")
    passed = all(loose.equal(a, b) for a, b in zip(exact.flat, approximate.flat))
    return TrialOutcome(passed, {"B": B, "X": X, "Y": Y}, lhs=exact, rhs=approximate)


def casimir_jacobi_trial(ctx: TrialContext) -> TrialOutcome:
    """Casimirs f0, f1, Jacobi identity, Lie structure constants and the trace form of f1"""
    s = ctx.services
    field = s.field
    A, B = ctx.matrix(), ctx.matrix()
    poisson = s.poisson
    lie = poisson.lie_structure_constants(B)
    linear = poisson.linearized_constants(B)
    checks = {
        "casimirs": poisson.casimir_check(A, B),
        "jacobi": poisson.jacobi_check(B, A),
        "lie-constants": all(field.equal(a, b) for key in lie.constants
                             for a, b in zip(lie.constants[key], linear.constants[key])),
        "lie-poisson": poisson.equal_arrays(lie.lie_poisson_matrix(A), poisson.structure_matrix(A, B)),
        "lie-jacobi": lie.jacobi_holds(field),
    }
    if not field.is_zero(B.det()):
        checks["f1-trace-form"] = field.equal(f1_trace_form(A, B), invariants(A, B).f1)
    failed = [name for name, ok in checks.items() if not ok]
    return TrialOutcome(not failed, {"A": A, "B": B}, message=", ".join(failed))


# leaf reduction


def lax_reduced_trial(chart_name: str) -> TrialFn:
    """The reduced map solves the Lax equation and a perturbed candidate does not"""
    def trial(ctx: TrialContext) -> TrialOutcome:
        s = ctx.services
        chart = chart_by_name(chart_name, s.field)
        x, y = ctx.point(chart), ctx.point(chart)
        u, v = s.leaf_reduction.solve_lax_equation(chart, x.coords, y.coords, x.params, y.params)
        bumped = u.with_coords((u.coords[0] + s.field.one(),) + tuple(u.coords[1:]))
        message = ""
        try:
            if s.leaf_reduction.lax_identity_holds(chart, x, y, bumped, v):
                message = "perturbed solution also satisfies the Lax equation"
        except DomainError:
            pass
        return TrialOutcome(not message, {"x": x, "y": y}, lhs=(u, v), message=message)
    return trial


def transport_trial(chart_name: str) -> TrialFn:
    """Conjugating the chart by P conjugates the reduced map and keeps the levels"""
    def trial(ctx: TrialContext) -> TrialOutcome:
        s = ctx.services
        base = chart_by_name(chart_name, s.field)
        P = s.sampler.invertible_matrix(ctx.rng)
        moved = s.leaf_reduction.conjugate_transport(base, P)
        x, y = ctx.point(base), ctx.point(base)
        u0, v0 = s.leaf_reduction.reduced_map(base, x, y)
        u1, v1 = s.leaf_reduction.reduced_map(moved, x, y)
        verifier = s.verifier
        levels = base.levels_for(x.params, s.field)
        checks = {
            "coordinates": verifier.elements_equal((u0, v0), (u1, v1)),
            "lax-matrix": moved.embed(u1, s.field).equals(conjugate(P, base.embed(u0, s.field)), s.field),
            "levels": verifier.elements_equal(moved.levels_of(moved.embed(x, s.field)), levels),
        }
        failed = [name for name, ok in checks.items() if not ok]
        return TrialOutcome(not failed, {"P": P, "x": x, "y": y}, lhs=(u1, v1), rhs=(u0, v0),
                            message=", ".join(failed))
    return trial


# degenerate limits


def _limit_instance(rng: random.Random):
    """Small grid points keep the O(eps) constant of the family error below 10"""
    x = (rng.choice(LIMIT_GRID), rng.choice(LIMIT_GRID))
    y = (rng.choice(LIMIT_GRID), rng.choice(LIMIT_GRID))
    alpha, beta = rng.sample(LIMIT_GRID, 2)
    return x, y, alpha, beta


def limits_adler_yamilov_trial(ctx: TrialContext) -> TrialOutcome:
    limits = ctx.services.limits
    x, y, alpha, beta = _limit_instance(ctx.rng)
    closed = limits.adler_yamilov_map(x, y, alpha, beta)
    report = limits.limit_convergence_check(
        lambda eps: limits.ay_family_map(x, y, alpha, beta, eps), closed)
    return TrialOutcome(report.passed, {"x": x, "y": y, "alpha": alpha, "beta": beta},
                        lhs=report.to_dict(), rhs=closed)


def limits_kdv_trial(ctx: TrialContext) -> TrialOutcome:
    limits = ctx.services.limits
    x, y, alpha, beta = _limit_instance(ctx.rng)
    if abs(x[0] + y[1]) < 0.5:
        raise PoleEncountered(f"x1 + y2 = {x[0] + y[1]} too close to the pole")
    closed = limits.kdv_lift_map(x, y, alpha, beta)
    report = limits.limit_convergence_check(
        lambda eps: limits.kdv_family_map(x, y, alpha, beta, eps), closed)
    return TrialOutcome(report.passed, {"x": x, "y": y, "alpha": alpha, "beta": beta},
                        lhs=report.to_dict(), rhs=closed)


def squeeze_kdv_trial(ctx: TrialContext) -> TrialOutcome:
    """Squeeze-compatible inputs y1 = x2 give a solution of the KdV quad equation"""
    s = ctx.services
    f1, f, f2 = ctx.scalar(), ctx.scalar(), ctx.scalar()
    alpha, beta = ctx.scalar(), ctx.scalar()
    quad = s.limits.kdv_quadgraph_reduce((f1, f), (f, f2), alpha, beta)
    return TrialOutcome(s.field.is_zero(quad.residual),
                        {"x": (f1, f), "y": (f, f2), "alpha": alpha, "beta": beta},
                        lhs=quad.residual, rhs=s.field.zero())


def degenerate_lax_trial(which: str) -> TrialFn:
    def trial(ctx: TrialContext) -> TrialOutcome:
        s = ctx.services
        x, y = ctx.pair(), ctx.pair()
        alpha, beta = ctx.scalar(), ctx.scalar()
        report = s.limits.degenerate_lax_check(which, x, y, alpha, beta)
        passed = report.passed
        message = ""
        if which == "L2" and report.non_unique == s.field.equal(x[0], y[1]):
            passed = False
            message = "second solution should differ from the image exactly when x1 != y2"
        return TrialOutcome(passed, {"x": x, "y": y, "alpha": alpha, "beta": beta},
                            lhs=report.image, rhs=report.alternative, message=message)
    return trial


# scalar backend self-tests


def field_axioms_trial(ctx: TrialContext) -> TrialOutcome:
    s = ctx.services
    field = s.field
    a, b, c = (ctx.scalar() / ctx.scalar() for _ in range(3))
    checks = {
        "add-commutes": field.equal(a + b, b + a),
        "mul-commutes": field.equal(a * b, b * a),
        "add-associates": field.equal((a + b) + c, a + (b + c)),
        "mul-associates": field.equal((a * b) * c, a * (b * c)),
        "distributes": field.equal(a * (b + c), a * b + a * c),
        "negation": field.is_zero(a - a),
        "text-roundtrip": field.equal(field.parse(field.format(a)), a),
    }
    if not a.is_zero():
        checks["inverse"] = field.equal(a * a.inverse(), 1)
    A = ctx.matrix()
    P = s.sampler.invertible_matrix(ctx.rng)
    moved = conjugate(P, A)
    checks["similar-det"] = field.equal(moved.det(), A.det())
    checks["similar-trace"] = field.equal(moved.trace(), A.trace())
    if not field.is_zero(A.det()):
        checks["matrix-inverse"] = (A @ mat_inverse(A)).equals(Mat2.identity(field), field)
    failed = [name for name, ok in checks.items() if not ok]
    return TrialOutcome(not failed, {"a": a, "b": b, "c": c, "A": A, "P": P}, message=", ".join(failed))


def _horner(coefficients: List[int], x: Any, field) -> Any:
    acc = field.lift(coefficients[0])
    for c in coefficients[1:]:
        acc = acc * x + field.lift(c)
    return acc


def dual_derivative_trial(ctx: TrialContext) -> TrialOutcome:
    """Dual-number derivative of a random rational function against central differences"""
    s = ctx.services
    field = s.field
    rng = ctx.rng
    numerator = [rng.randint(-3, 3) for _ in range(3)]
    denominator = [rng.randint(-3, 3) for _ in range(3)]
    x0 = round(rng.uniform(-2.0, 2.0), 6)
    leading = np.trim_zeros(np.array(denominator, dtype=float), "f")
    if leading.size == 0:
        raise PoleEncountered("denominator is identically zero")
    if leading.size > 1 and np.any(np.abs(np.roots(leading) - x0) < 0.5):
        raise PoleEncountered(f"pole of the denominator near x0 = {x0}")

    def f(x: Any) -> Any:
        return _horner(numerator, x, field) / _horner(denominator, x, field)

    exact = s.differentiation.derivative_of(f, x0)
    approximate = s.differentiation.central_difference(f, x0)
    passed = field.with_tolerance(DUAL_DERIVATIVE_TOLERANCE).equal(exact, approximate)
    return TrialOutcome(passed, {"numerator": numerator, "denominator": denominator, "x0": x0},
                        lhs=exact, rhs=approximate)


def build_default_catalogue() -> SuiteCatalogue:
    catalogue = SuiteCatalogue()
    add = catalogue.register
    for key in BASE_MATRICES:
        add(Suite(f"refactor/{key}", 200, refactor_trial(key),
                  description=f"factorization identity for B = {key} and its conjugates"))
    for key in BASE_MATRICES:
        add(Suite(f"yb-cube/general-{key}-B", 100, general_cube_trial(key),
                  description=f"Yang-Baxter cube for R_B, B = {key}"))
    add(Suite("yb-cube/trivial", 100, trivial_cube_trial, description="Yang-Baxter cube for the swap"))
    for name in chart_names():
        add(Suite(f"yb-cube/reduced-{name}", 100, reduced_cube_trial(name),
                  description=f"parametric Yang-Baxter cube on the {name} chart"))
    for name in ("adler-yamilov", "kdv-lift"):
        add(Suite(f"yb-cube/{name}", 100, closed_form_cube_trial(name),
                  description=f"parametric Yang-Baxter cube for the {name} map"))
    for key in BASE_MATRICES:
        add(Suite(f"poisson/general-{key}", 50, poisson_general_trial(key),
                  description=f"R_B preserves J_B x J_B, B = {key}"))
    for name in chart_names():
        add(Suite(f"poisson/reduced-{name}", 50, poisson_reduced_trial(name),
                  description=f"reduced map preserves the {name} leaf bracket"))
    add(Suite("poisson/adler-yamilov", 50, poisson_closed_form_trial("adler-yamilov", 1),
              description="canonical bracket {x1, x2} = 1"))
    add(Suite("poisson/kdv-lift", 50, poisson_closed_form_trial("kdv-lift", -1),
              description="canonical bracket {x1, x2} = -1"))
    add(Suite("poisson/kdv-family", 50, poisson_kdv_family_trial,
              description="bracket {x1, x2} = -1 + eps(x1 + x2) at eps = 1/10"))
    add(Suite("jacobian/finite-difference", 20, finite_difference_trial, backend="complex64",
              description="dual-number Jacobian against central differences"))
    add(Suite("casimir-jacobi", 100, casimir_jacobi_trial,
              description="Casimirs, Jacobi identity and Lie-Poisson structure of J_B"))
    for key in BASE_MATRICES:
        add(Suite(f"uniqueness/{key}", 100, uniqueness_trial(key),
                  description="X recovered from the triple product and f_i(X)"))
    for key in BASE_MATRICES:
        add(Suite(f"quadrirational/{key}", 100, quadrirational_trial(key),
                  description="inverse branch undoes R_B"))
    add(Suite("limits/adler-yamilov", 5, limits_adler_yamilov_trial, backend="complex64",
              description="B = diag(1, eps) family converges to the Adler-Yamilov map"))
    add(Suite("limits/kdv", 5, limits_kdv_trial, backend="gaussian-rational",
              description="B = [[eps, 1], [0, eps]] family converges to the KdV lift"))
    add(Suite("squeeze/kdv", 100, squeeze_kdv_trial, description="squeeze to the KdV quad equation"))
    for name in chart_names():
        add(Suite(f"lax/reduced-{name}", 100, lax_reduced_trial(name),
                  description=f"Lax equation on the {name} chart"))
    add(Suite("lax/degenerate-l1", 50, degenerate_lax_trial("L1"),
              description="Adler-Yamilov map solves the L1 Lax equation"))
    add(Suite("lax/degenerate-l2", 50, degenerate_lax_trial("L2"),
              description="KdV lift solves the L2 Lax equation, which has a second solution"))
    for name in chart_names():
        add(Suite(f"transport/{name}", 50, transport_trial(name),
                  description=f"conjugated {name} chart"))
    add(Suite("field/axioms", 1000, field_axioms_trial, description="field and matrix identities"))
    add(Suite("field/dual-derivative", 100, dual_derivative_trial, backend="complex64",
              description="dual numbers against central differences"))
    return catalogue
