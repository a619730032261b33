#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

from fractions import Fraction

import numpy as np
import pytest

from pyybmaps.core.entities.leaf_chart import ParamPoint
from pyybmaps.core.entities.pencil import PencilInvariants
from pyybmaps.core.entities.scalars import DualScalar
from pyybmaps.core.errors import ScalarParseError
from pyybmaps.infrastructure.serialization import (
    decode_matrix,
    decode_scalar,
    decode_vector,
    encode_matrix,
    encode_value,
)


def test_matrix_codec(mat, exact):
    A = mat([[Fraction(3, 4), "i"], [-2, 0]])
    data = encode_matrix(A, exact)
    assert data == {"a1": "3/4+0i", "a2": "0+1i", "a3": "-2+0i", "a4": "0+0i"}
    assert decode_matrix(data, exact) == A
    assert decode_matrix([["3/4", "i"], [-2, 0]], exact) == A


def test_decode_rejects_malformed_input(exact):
    with pytest.raises(ScalarParseError):
        decode_matrix({"a1": 1, "a2": 2, "a3": 3}, exact)
    with pytest.raises(ScalarParseError):
        decode_matrix("[[1, 2], [3, 4]]", exact)
    with pytest.raises(ScalarParseError):
        decode_scalar(True, exact)
    with pytest.raises(ScalarParseError):
        decode_scalar({"re": 1}, exact)
    with pytest.raises(ScalarParseError):
        decode_vector("1, 2", exact)


def test_decode_vector(exact):
    assert decode_vector(["1/2", 3, "-i"], exact) == (Fraction(1, 2), 3, exact.lift((0, -1)))


def test_encode_value_walks_nested_structures(mat, exact):
    value = {
        "A": mat([[1, 0], [0, 1]]),
        "point": ParamPoint((exact.lift(2),), (exact.lift("1/3"),)),
        "f": PencilInvariants(exact.lift(1), exact.lift(3), exact.lift(1)),
        "dual": DualScalar(exact.lift(2), exact.lift(1)),
        "array": np.array([exact.lift(1), exact.lift(-1)], dtype=object),
        "pair": (1, None, "text", 0.5),
    }
    encoded = encode_value(value, exact)
    assert encoded["A"]["a1"] == "1+0i"
    assert encoded["point"] == {"coords": ["2+0i"], "params": ["1/3+0i"]}
    assert encoded["f"] == {"f0": "1+0i", "f1": "3+0i", "f2": "1+0i"}
    assert encoded["dual"] == {"value": "2+0i", "deriv": "1+0i"}
    assert encoded["array"] == ["1+0i", "-1+0i"]
    assert encoded["pair"] == [1, None, "text", 0.5]


def test_float_scalars_encode_losslessly(floating):
    x = floating.lift(complex(0.1, -0.2))
    assert decode_scalar(encode_value(x, floating), floating) == x
