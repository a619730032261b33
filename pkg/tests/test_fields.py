#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

from fractions import Fraction

import pytest

from pyybmaps.core.entities.fields import (
    ComplexFloatField,
    field_by_name,
    field_names,
)
from pyybmaps.core.entities.scalars import ComplexFloat, DualScalar, GaussianRational
from pyybmaps.core.errors import BackendUnsupported, ScalarParseError


def test_field_names_are_the_cli_choices():
    assert field_names() == ["gaussian-rational", "complex64"]
    assert isinstance(field_by_name("complex64"), ComplexFloatField)
    with pytest.raises(BackendUnsupported):
        field_by_name("float128")


def test_exact_lift(exact):
    assert exact.lift(3) == GaussianRational(3)
    assert exact.lift(Fraction(1, 3)) == GaussianRational(Fraction(1, 3))
    assert exact.lift("1/2-i") == GaussianRational(Fraction(1, 2), -1)
    assert exact.lift((1, -2)) == GaussianRational(1, -2)
    assert exact.lift(0.25) == GaussianRational(Fraction(1, 4))
    assert exact.i() * exact.i() == -1
    with pytest.raises(ScalarParseError):
        exact.lift(object())


def test_float_lift(floating):
    assert floating.lift(GaussianRational(Fraction(1, 2), 1)) == ComplexFloat(0.5 + 1j)
    assert floating.lift("2-3i") == ComplexFloat(2 - 3j)
    assert floating.lift((1, 2)) == ComplexFloat(1 + 2j)
    with pytest.raises(ScalarParseError):
        floating.lift([1, 2, 3])


def test_equality_is_exact_or_within_tolerance(exact, floating):
    assert exact.equal(Fraction(1, 3), "1/3")
    assert not exact.equal(Fraction(1, 3), 0.3333333333)
    assert floating.equal(1.0, 1.0 + 1e-12)
    assert not floating.equal(1.0, 1.001)
    assert floating.with_tolerance(1e-2).equal(1.0, 1.001)


def test_negative_tolerance_is_rejected():
    with pytest.raises(ValueError):
        ComplexFloatField(-1.0)


def test_format_uses_text_form(exact):
    assert exact.format(Fraction(3, 4)) == "3/4+0i"
    assert exact.parse(exact.format(GaussianRational(-1, Fraction(2, 7)))) == GaussianRational(-1, Fraction(2, 7))
    with pytest.raises(ScalarParseError):
        exact.format(DualScalar(exact.one(), exact.zero()))


def test_square_root_needs_the_float_backend(exact, floating):
    with pytest.raises(BackendUnsupported):
        exact.sqrt(exact.lift(4))
    assert floating.sqrt(floating.lift(-9)).close(ComplexFloat(3j))


def test_zero_detection(exact, floating):
    assert exact.is_zero(exact.lift("0+0i"))
    assert floating.is_zero(1e-12)
