#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
Instance Sampling Services for PyYBMaps

Seeded rejection sampling of small Gaussian-integer instances inside the
domains of the maps. Every draw goes through a random.Random owned by the
caller, so a (seed, kind) pair always gives the same instance.
"""

import hashlib
import logging
import random
from typing import Any, Callable, Dict, Optional, Tuple, TypeVar

from ..entities.mat2 import Mat2
from ..errors import DomainError, SamplingExhausted
from .refactorization import RefactorizationService

logger = logging.getLogger(__name__)

T = TypeVar("T")

DEFAULT_ENTRY_BOUND = 3
DEFAULT_MAX_REJECTIONS = 1000


def derive_seed(master_seed: int, *labels: Any) -> int:
    """Stable 64-bit seed from the master seed and any labels"""
    text = ":".join(str(part) for part in (master_seed,) + labels)
    return int.from_bytes(hashlib.sha256(text.encode("utf-8")).digest()[:8], "big")


class InstanceSampler:
    """Service drawing random instances for the verification suites"""

    def __init__(self, field, entry_bound: int = DEFAULT_ENTRY_BOUND,
                 max_rejections: int = DEFAULT_MAX_REJECTIONS,
                 refactorization: Optional[RefactorizationService] = None):
        self.field = field
        self.entry_bound = entry_bound
        self.max_rejections = max_rejections
        self.refactorization = refactorization or RefactorizationService(field)
        self._kinds: Dict[str, Callable[[random.Random], Any]] = {}
        self._register_default_kinds()

    def gaussian_integer(self, rng: random.Random, bound: Optional[int] = None) -> Any:
        bound = self.entry_bound if bound is None else bound
        return self.field.lift((rng.randint(-bound, bound), rng.randint(-bound, bound)))

    def integer(self, rng: random.Random, bound: Optional[int] = None) -> Any:
        bound = self.entry_bound if bound is None else bound
        return self.field.lift(rng.randint(-bound, bound))

    def matrix(self, rng: random.Random, bound: Optional[int] = None) -> Mat2:
        return Mat2.from_entries([self.gaussian_integer(rng, bound) for _ in range(4)])

    def vector(self, rng: random.Random, size: int, bound: Optional[int] = None) -> Tuple[Any, ...]:
        return tuple(self.gaussian_integer(rng, bound) for _ in range(size))

    def invertible_matrix(self, rng: random.Random, bound: Optional[int] = None) -> Mat2:
        return self.sample_until(lambda r: self.matrix(r, bound),
                                 lambda P: not self.field.is_zero(P.det()), rng)

    def sample_until(self, draw: Callable[[random.Random], T], accept: Callable[[T], bool],
                     rng: random.Random) -> T:
        """Redraw until accept() holds; a DomainError inside accept() is a rejection"""
        for _ in range(self.max_rejections + 1):
            candidate = draw(rng)
            try:
                if accept(candidate):
                    return candidate
            except DomainError as e:
                logger.debug("Rejected sample: %s", e)
        raise SamplingExhausted(f"No admissible instance after {self.max_rejections} rejections")

    def refactor_pair(self, rng: random.Random, B: Mat2) -> Tuple[Mat2, Mat2]:
        """(X, Y) with det P1 != 0 and det(U - Y) != 0"""
        def accept(pair: Tuple[Mat2, Mat2]) -> bool:
            X, Y = pair
            if not self.refactorization.general_map_domain(X, Y, B):
                return False
            U, _ = self.refactorization.apply(X, Y, B)
            return not self.field.is_zero((U - Y).det())
        return self.sample_until(lambda r: (self.matrix(r), self.matrix(r)), accept, rng)

    def matrix_triple(self, rng: random.Random) -> Tuple[Mat2, Mat2, Mat2]:
        return self.matrix(rng), self.matrix(rng), self.matrix(rng)

    def register_kind(self, kind: str, draw: Callable[[random.Random], Any]) -> None:
        self._kinds[kind] = draw

    def kinds(self) -> Tuple[str, ...]:
        return tuple(self._kinds)

    def sample_instance(self, kind: str, seed: int) -> Any:
        """Deterministic instance of a registered kind"""
        try:
            draw = self._kinds[kind]
        except KeyError:
            raise KeyError(f"Unknown instance kind {kind!r}") from None
        return draw(random.Random(derive_seed(seed, kind)))

    def _register_default_kinds(self) -> None:
        identity = Mat2.identity(self.field)
        self.register_kind("pair-B=I", lambda rng: self.refactor_pair(rng, identity))
        self.register_kind("matrix", self.matrix)
        self.register_kind("invertible", self.invertible_matrix)
