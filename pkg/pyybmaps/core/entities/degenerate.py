#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
Result Entities for the eps -> 0 degenerations
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

Pair = Tuple[Any, Any]


@dataclass
class LimitReport:
    """Errors |family(eps) - closed form| along a decreasing eps schedule"""

    schedule: List[float]
    errors: List[float]
    order: Optional[float]
    final_error: float
    tolerance: float
    min_order: float
    monotone: bool
    passed: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schedule": list(self.schedule),
            "errors": list(self.errors),
            "order": self.order,
            "final_error": self.final_error,
            "tolerance": self.tolerance,
            "min_order": self.min_order,
            "monotone": self.monotone,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class QuadGraphReduction:
    """Vertex values of one KdV quad and the residual of (f12-f)(f1-f2) = a-b"""

    f: Any
    f1: Any
    f2: Any
    f12: Any
    residual: Any


@dataclass
class DegenerateLaxReport:
    """Which solutions of a degenerate Lax equation were exhibited"""

    which: str
    image: Tuple[Pair, Pair]
    image_satisfies: bool
    alternative: Optional[Tuple[Pair, Pair]] = None
    alternative_satisfies: Optional[bool] = None
    swap_satisfies: Optional[bool] = None
    notes: List[str] = field(default_factory=list)

    @property
    def non_unique(self) -> bool:
        """A second, different solution was found"""
        return bool(self.alternative_satisfies) and self.alternative != self.image

    @property
    def passed(self) -> bool:
        if not self.image_satisfies:
            return False
        if self.alternative is not None:
            return bool(self.alternative_satisfies)
        return True
