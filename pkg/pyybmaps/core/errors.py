#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
Exception hierarchy for PyYBMaps

Services raise these; the suite runner, repositories and the CLI catch them.
Everything derived from DomainError means "this input lies outside the
domain of definition of the map", which the suite runner counts as a
rejected trial rather than a failure.
"""


class YBMapError(Exception):
    """Base class for all library errors"""


class DomainError(YBMapError):
    """Input lies outside the domain of an operation"""


class DivisionByZero(DomainError, ZeroDivisionError):
    """Attempt to invert a zero scalar"""


class SingularMatrix(DomainError):
    """Matrix with zero determinant where an inverse is needed"""


class SingularB(SingularMatrix):
    """det B = 0 for an operation that needs B invertible"""


class SingularP1(DomainError):
    """det P1(X, Y) = 0: the pair is outside the re-factorization domain"""


class SingularDifference(DomainError):
    """det(U - Y) = 0 in the inverse branch"""


class NonGenericTriple(DomainError):
    """det N = 0 in the three-factor reconstruction"""


class ChartSingular(DomainError):
    """Chart resolver hit a vanishing denominator"""


class BranchCut(DomainError):
    """Square root evaluated on or next to its branch cut"""


class PoleEncountered(DomainError):
    """Closed-form map evaluated at a pole"""


class SqueezeViolated(YBMapError, ValueError):
    """Inputs do not satisfy the squeeze condition y1 = x2"""


class SamplingExhausted(YBMapError):
    """Rejection sampling gave up without finding an admissible instance"""


class UnknownSuite(YBMapError, KeyError):
    """No suite registered under the requested name"""


class UnknownMap(YBMapError, KeyError):
    """No map registered under the requested name"""


class UnknownChart(YBMapError, KeyError):
    """No chart registered under the requested name"""


class ScalarParseError(YBMapError, ValueError):
    """Text does not match the scalar form p/q+r/si"""


class BackendUnsupported(YBMapError):
    """Operation not available on the selected scalar backend"""


class LaxEquationViolated(YBMapError):
    """A claimed solution does not satisfy its Lax equation"""


class ReportSchemaError(YBMapError, ValueError):
    """Stored report has an incompatible or missing schema version"""
