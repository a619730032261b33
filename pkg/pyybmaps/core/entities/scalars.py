#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
Scalar Entities for PyYBMaps

Field elements beneath all matrix algebra: exact Gaussian rationals,
binary64 complex numbers and dual scalars for forward-mode derivatives.
All scalars are immutable and safe to share between worker threads.
"""

import cmath
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Tuple

from ..errors import BackendUnsupported, DivisionByZero, ScalarParseError

DEFAULT_TOLERANCE = 1e-9

_NUMBER = r"(?:\d+/\d+|(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
_FULL_FORM = re.compile(rf"^(?P<re>[+-]?{_NUMBER})(?:(?P<sign>[+-])(?P<im>{_NUMBER})?i)?$")
_IMAGINARY_FORM = re.compile(rf"^(?P<sign>[+-]?)(?P<im>{_NUMBER})?i$")


class FieldScalar(ABC):
    """Abstract field element: +, -, *, /, negation, inverse and equality"""

    __slots__ = ()

    @abstractmethod
    def __add__(self, other): ...

    @abstractmethod
    def __mul__(self, other): ...

    @abstractmethod
    def __neg__(self): ...

    @abstractmethod
    def inverse(self) -> 'FieldScalar':
        """Multiplicative inverse, raising DivisionByZero for zero"""

    @abstractmethod
    def is_zero(self) -> bool:
        """True for the additive identity"""

    @classmethod
    def _coerce(cls, other: Any) -> Optional['FieldScalar']:
        return None

    def __radd__(self, other):
        return self.__add__(other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __truediv__(self, other):
        if isinstance(other, FieldScalar):
            return self * other.inverse()
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return self * coerced.inverse()

    def __rtruediv__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return coerced * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        result = None
        while exponent:
            if exponent & 1:
                result = base if result is None else result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result if result is not None else self * 0 + 1

    def sqrt(self) -> 'FieldScalar':
        """Principal square root where the backend supports it"""
        raise BackendUnsupported(f"{type(self).__name__} has no square root")


def parse_scalar_text(text: str) -> Tuple[Fraction, Fraction]:
    """Parse the textual form "p/q+r/si" into exact real and imaginary parts"""
    if not isinstance(text, str):
        raise ScalarParseError(f"Scalar text must be a string, got {type(text).__name__}")
    compact = text.replace(" ", "")
    try:
        match = _FULL_FORM.match(compact)
        if match:
            real = Fraction(match.group("re"))
            if match.group("sign") is None:
                return real, Fraction(0)
            imag = Fraction(match.group("im")) if match.group("im") else Fraction(1)
            return real, imag if match.group("sign") == "+" else -imag
        match = _IMAGINARY_FORM.match(compact)
        if match:
            imag = Fraction(match.group("im")) if match.group("im") else Fraction(1)
            return Fraction(0), -imag if match.group("sign") == "-" else imag
    except (ValueError, ZeroDivisionError) as e:
        raise ScalarParseError(f"Invalid scalar {text!r}: {e}") from e
    raise ScalarParseError(f"Invalid scalar {text!r}, expected the form p/q+r/si")


@dataclass(frozen=True, eq=False)
class GaussianRational(FieldScalar):
    """Exact element of Q(i); Fraction keeps both parts in lowest terms"""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def _coerce(cls, other: Any) -> Optional['GaussianRational']:
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return cls(other)
        return None

    @classmethod
    def parse(cls, text: str) -> 'GaussianRational':
        real, imag = parse_scalar_text(text)
        return cls(real, imag)

    def to_text(self) -> str:
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def inverse(self) -> 'GaussianRational':
        norm = self.re * self.re + self.im * self.im
        if norm == 0:
            raise DivisionByZero("Inverse of zero Gaussian rational")
        return GaussianRational(self.re / norm, -self.im / norm)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __str__(self):
        return self.to_text()


@dataclass(frozen=True, eq=False)
class ComplexFloat(FieldScalar):
    """binary64 complex number; comparisons go through close()"""

    value: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "value", complex(self.value))

    @classmethod
    def _coerce(cls, other: Any) -> Optional['ComplexFloat']:
        if isinstance(other, ComplexFloat):
            return other
        if isinstance(other, (int, float, complex, Fraction)):
            return cls(complex(other))
        return None

    @classmethod
    def parse(cls, text: str) -> 'ComplexFloat':
        real, imag = parse_scalar_text(text)
        return cls(complex(float(real), float(imag)))

    def to_text(self) -> str:
        sign = "-" if self.value.imag < 0 else "+"
        return f"{self.value.real!r}{sign}{abs(self.value.imag)!r}i"

    def to_complex(self) -> complex:
        return self.value

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexFloat(self.value + o.value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexFloat(self.value * o.value)

    def __neg__(self):
        return ComplexFloat(-self.value)

    def __abs__(self) -> float:
        return abs(self.value)

    def inverse(self) -> 'ComplexFloat':
        if self.value == 0:
            raise DivisionByZero("Inverse of zero complex float")
        return ComplexFloat(1.0 / self.value)

    def is_zero(self) -> bool:
        return self.value == 0

    def sqrt(self) -> 'ComplexFloat':
        return ComplexFloat(cmath.sqrt(self.value))

    def close(self, other: Any, tolerance: float = DEFAULT_TOLERANCE) -> bool:
        """Absolute comparison for magnitudes up to 1, relative above

        The error bound is tolerance * max(1, |self|, |other|).
        """
        o = self._coerce(other)
        if o is None:
            return False
        scale = max(1.0, abs(self.value), abs(o.value))
        return abs(self.value - o.value) <= tolerance * scale

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.value == o.value

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        return self.to_text()


@dataclass(frozen=True, eq=False)
class DualScalar(FieldScalar):
    """value + deriv*eps with eps^2 = 0 over any base scalar"""

    value: Any
    deriv: Any

    @staticmethod
    def _split(other: Any):
        if isinstance(other, DualScalar):
            return other.value, other.deriv
        return other, None

    def __add__(self, other):
        value, deriv = self._split(other)
        if deriv is None:
            return DualScalar(self.value + value, self.deriv)
        return DualScalar(self.value + value, self.deriv + deriv)

    def __mul__(self, other):
        value, deriv = self._split(other)
        if deriv is None:
            return DualScalar(self.value * value, self.deriv * value)
        return DualScalar(self.value * value, self.value * deriv + self.deriv * value)

    def __neg__(self):
        return DualScalar(-self.value, -self.deriv)

    def __truediv__(self, other):
        if isinstance(other, DualScalar):
            return self * other.inverse()
        return DualScalar(self.value / other, self.deriv / other)

    def __rtruediv__(self, other):
        return other * self.inverse()

    def inverse(self) -> 'DualScalar':
        inv = self.value.inverse()
        return DualScalar(inv, -(self.deriv * inv * inv))

    def is_zero(self) -> bool:
        return self.value.is_zero() and self.deriv.is_zero()

    def sqrt(self) -> 'DualScalar':
        root = self.value.sqrt()
        return DualScalar(root, self.deriv * (root + root).inverse())

    def __eq__(self, other):
        value, deriv = self._split(other)
        if deriv is None:
            return self.value == value and self.deriv.is_zero()
        return self.value == value and self.deriv == deriv

    def __hash__(self):
        return hash((self.value, self.deriv))

    def __str__(self):
        return f"{self.value}+({self.deriv})eps"


def derivative_part(x: Any, zero: FieldScalar) -> FieldScalar:
    """eps-coefficient of x; constants have derivative zero"""
    if isinstance(x, DualScalar):
        return x.deriv
    return zero


def value_part(x: Any) -> Any:
    if isinstance(x, DualScalar):
        return x.value
    return x
