#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
JSON codecs for scalars, matrices and chart points

Scalars travel as text ("3/4+1/2i"), matrices as {"a1": ..., "a4": ...}.
"""

from typing import Any, Dict, Sequence

import numpy as np

from ..core.entities.leaf_chart import ParamPoint
from ..core.entities.mat2 import Mat2
from ..core.entities.pencil import PencilInvariants
from ..core.entities.scalars import DualScalar, FieldScalar
from ..core.errors import ScalarParseError

MATRIX_KEYS = ("a1", "a2", "a3", "a4")


def encode_scalar(x: Any, field) -> str:
    return field.format(x)


def decode_scalar(data: Any, field) -> FieldScalar:
    if isinstance(data, bool):
        raise ScalarParseError(f"Not a scalar: {data!r}")
    if isinstance(data, (int, float, str)):
        return field.lift(data)
    raise ScalarParseError(f"Not a scalar: {data!r}")


def encode_matrix(A: Mat2, field) -> Dict[str, str]:
    return {key: field.format(value) for key, value in zip(MATRIX_KEYS, A.entries)}


def decode_matrix(data: Any, field) -> Mat2:
    if isinstance(data, dict):
        missing = [key for key in MATRIX_KEYS if key not in data]
        if missing:
            raise ScalarParseError(f"Matrix is missing entries {missing}")
        return Mat2.from_entries([decode_scalar(data[key], field) for key in MATRIX_KEYS])
    if isinstance(data, (list, tuple)) and len(data) == 2:
        return Mat2.from_rows([[decode_scalar(v, field) for v in row] for row in data])
    raise ScalarParseError(f"Not a matrix: {data!r}")


def decode_vector(data: Sequence[Any], field) -> tuple:
    if not isinstance(data, (list, tuple)):
        raise ScalarParseError(f"Expected a list of scalars, got {data!r}")
    return tuple(decode_scalar(v, field) for v in data)


def encode_value(value: Any, field) -> Any:
    """Recursively turn library values into JSON-ready data"""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, (int, float)):
        return value
    if isinstance(value, DualScalar):
        return {"value": encode_value(value.value, field), "deriv": encode_value(value.deriv, field)}
    if isinstance(value, FieldScalar):
        return field.format(value)
    if isinstance(value, Mat2):
        return encode_matrix(value, field)
    if isinstance(value, ParamPoint):
        return {"coords": encode_value(value.coords, field), "params": encode_value(value.params, field)}
    if isinstance(value, PencilInvariants):
        return {"f0": field.format(value.f0), "f1": field.format(value.f1), "f2": field.format(value.f2)}
    if isinstance(value, np.ndarray):
        return encode_value(value.tolist(), field)
    if isinstance(value, dict):
        return {str(k): encode_value(v, field) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode_value(v, field) for v in value]
    return str(value)
