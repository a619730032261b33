#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
Scalar Field Backends for PyYBMaps

A backend knows how to lift plain Python numbers and text into its scalar
type, how to compare two scalars and how to print them for JSON reports.
"""

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Dict, List

from .scalars import (
    DEFAULT_TOLERANCE,
    ComplexFloat,
    DualScalar,
    FieldScalar,
    GaussianRational,
)
from ..errors import BackendUnsupported, ScalarParseError


class ScalarField(ABC):
    """Abstract scalar backend"""

    name: str = ""
    exact: bool = False

    def __init__(self, tolerance: float = DEFAULT_TOLERANCE):
        if tolerance < 0:
            raise ValueError("tolerance must be >= 0")
        self.tolerance = tolerance

    @abstractmethod
    def lift(self, value: Any) -> FieldScalar:
        """Convert int, Fraction, text, (re, im) pairs or scalars to this backend"""
        pass

    @abstractmethod
    def equal(self, a: Any, b: Any) -> bool:
        """Backend equality: exact, or within tolerance"""
        pass

    def zero(self) -> FieldScalar:
        return self.lift(0)

    def one(self) -> FieldScalar:
        return self.lift(1)

    def i(self) -> FieldScalar:
        return self.lift((0, 1))

    def parse(self, text: str) -> FieldScalar:
        return self.lift(str(text))

    def format(self, x: Any) -> str:
        if isinstance(x, DualScalar):
            raise ScalarParseError("Dual scalars have no textual form")
        return self.lift(x).to_text()

    def is_zero(self, x: Any) -> bool:
        return self.equal(x, 0)

    def sqrt(self, x: Any) -> FieldScalar:
        if self.exact:
            raise BackendUnsupported(f"Backend {self.name} has no square root")
        return x.sqrt()

    def with_tolerance(self, tolerance: float) -> 'ScalarField':
        return type(self)(tolerance)

    def __repr__(self):
        return f"{type(self).__name__}(tolerance={self.tolerance!r})"


class GaussianRationalField(ScalarField):
    """Exact backend Q(i)"""

    name = "gaussian-rational"
    exact = True

    def lift(self, value: Any) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        if isinstance(value, str):
            return GaussianRational.parse(value)
        if isinstance(value, float):
            return GaussianRational(Fraction(repr(value)))
        if isinstance(value, tuple) and len(value) == 2:
            return GaussianRational(self._exact_part(value[0]), self._exact_part(value[1]))
        raise ScalarParseError(f"Cannot lift {value!r} to {self.name}")

    @staticmethod
    def _exact_part(part: Any) -> Fraction:
        if isinstance(part, float):
            return Fraction(repr(part))
        if isinstance(part, str):
            return Fraction(part)
        return Fraction(part)

    def equal(self, a: Any, b: Any) -> bool:
        return self.lift(a) == self.lift(b)


class ComplexFloatField(ScalarField):
    """binary64 complex backend"""

    name = "complex64"
    exact = False

    def lift(self, value: Any) -> ComplexFloat:
        if isinstance(value, ComplexFloat):
            return value
        if isinstance(value, GaussianRational):
            return ComplexFloat(value.to_complex())
        if isinstance(value, str):
            return ComplexFloat.parse(value)
        if isinstance(value, tuple) and len(value) == 2:
            return ComplexFloat(complex(float(value[0]), float(value[1])))
        if isinstance(value, (int, float, complex, Fraction)):
            return ComplexFloat(complex(value))
        raise ScalarParseError(f"Cannot lift {value!r} to {self.name}")

    def equal(self, a: Any, b: Any) -> bool:
        return self.lift(a).close(self.lift(b), self.tolerance)


FIELD_BACKENDS: Dict[str, type] = {
    GaussianRationalField.name: GaussianRationalField,
    ComplexFloatField.name: ComplexFloatField,
}


def field_names() -> List[str]:
    return list(FIELD_BACKENDS)


def field_by_name(name: str, tolerance: float = DEFAULT_TOLERANCE) -> ScalarField:
    """Look up a backend by its CLI name"""
    try:
        return FIELD_BACKENDS[name](tolerance)
    except KeyError:
        raise BackendUnsupported(
            f"Unknown field backend {name!r}, expected one of {', '.join(FIELD_BACKENDS)}"
        ) from None
