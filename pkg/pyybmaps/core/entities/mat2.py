#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
2x2 Matrix Entity for PyYBMaps

Entries are labelled a1..a4 in row order, [[a1, a2], [a3, a4]], which is
the order the Sklyanin structure matrix indexes them in.
"""

from dataclasses import dataclass
from typing import Any, Callable, Sequence, Tuple

from ..errors import DivisionByZero, SingularMatrix


@dataclass(frozen=True)
class Mat2:
    """Immutable 2x2 matrix over any field scalar"""

    a1: Any
    a2: Any
    a3: Any
    a4: Any

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], field=None) -> 'Mat2':
        """Build from [[a1, a2], [a3, a4]], lifting entries into field if given"""
        (a1, a2), (a3, a4) = rows
        if field is not None:
            a1, a2, a3, a4 = (field.lift(v) for v in (a1, a2, a3, a4))
        return cls(a1, a2, a3, a4)

    @classmethod
    def from_entries(cls, entries: Sequence[Any], field=None) -> 'Mat2':
        a1, a2, a3, a4 = entries
        return cls.from_rows(((a1, a2), (a3, a4)), field)

    @classmethod
    def identity(cls, field) -> 'Mat2':
        return cls(field.one(), field.zero(), field.zero(), field.one())

    @classmethod
    def zero(cls, field) -> 'Mat2':
        z = field.zero()
        return cls(z, z, z, z)

    @classmethod
    def diag(cls, d1: Any, d2: Any, field) -> 'Mat2':
        return cls(field.lift(d1), field.zero(), field.zero(), field.lift(d2))

    @property
    def entries(self) -> Tuple[Any, Any, Any, Any]:
        return (self.a1, self.a2, self.a3, self.a4)

    @property
    def rows(self) -> Tuple[Tuple[Any, Any], Tuple[Any, Any]]:
        return ((self.a1, self.a2), (self.a3, self.a4))

    def map(self, fn: Callable[[Any], Any]) -> 'Mat2':
        return Mat2(fn(self.a1), fn(self.a2), fn(self.a3), fn(self.a4))

    def __add__(self, other: 'Mat2') -> 'Mat2':
        return Mat2(self.a1 + other.a1, self.a2 + other.a2,
                    self.a3 + other.a3, self.a4 + other.a4)

    def __sub__(self, other: 'Mat2') -> 'Mat2':
        return Mat2(self.a1 - other.a1, self.a2 - other.a2,
                    self.a3 - other.a3, self.a4 - other.a4)

    def __neg__(self) -> 'Mat2':
        return Mat2(-self.a1, -self.a2, -self.a3, -self.a4)

    def __matmul__(self, other: 'Mat2') -> 'Mat2':
        return Mat2(
            self.a1 * other.a1 + self.a2 * other.a3,
            self.a1 * other.a2 + self.a2 * other.a4,
            self.a3 * other.a1 + self.a4 * other.a3,
            self.a3 * other.a2 + self.a4 * other.a4,
        )

    def __mul__(self, k: Any) -> 'Mat2':
        """Scalar multiple; use @ for the matrix product"""
        if isinstance(k, Mat2):
            return NotImplemented
        return Mat2(self.a1 * k, self.a2 * k, self.a3 * k, self.a4 * k)

    def __rmul__(self, k: Any) -> 'Mat2':
        return self.__mul__(k)

    def det(self) -> Any:
        return self.a1 * self.a4 - self.a2 * self.a3

    def trace(self) -> Any:
        return self.a1 + self.a4

    def adjugate(self) -> 'Mat2':
        return Mat2(self.a4, -self.a2, -self.a3, self.a1)

    def transpose(self) -> 'Mat2':
        return Mat2(self.a1, self.a3, self.a2, self.a4)

    def inverse(self) -> 'Mat2':
        """adj(A)/det(A); raises SingularMatrix when det A = 0"""
        try:
            inv_det = self.det().inverse()
        except DivisionByZero:
            raise SingularMatrix(f"Singular matrix {self}") from None
        return self.adjugate() * inv_det

    def equals(self, other: 'Mat2', field) -> bool:
        """Entrywise comparison under the field's equality"""
        return all(field.equal(a, b) for a, b in zip(self.entries, other.entries))

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.entries)

    def __str__(self):
        return f"[[{self.a1}, {self.a2}], [{self.a3}, {self.a4}]]"


def mat_mul(A: Mat2, B: Mat2) -> Mat2:
    return A @ B


def mat_inverse(A: Mat2) -> Mat2:
    return A.inverse()


def conjugate(P: Mat2, A: Mat2) -> Mat2:
    """P A P^-1; raises SingularMatrix when det P = 0"""
    return P @ A @ P.inverse()
