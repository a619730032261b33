#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
Re-factorization Result Entity for PyYBMaps
"""

from dataclasses import dataclass
from typing import Tuple

from .mat2 import Mat2
from .pencil import PencilInvariants


@dataclass(frozen=True)
class RefactorResult:
    """(U, V) with (Y - zB)(X - zB) = (U - zB)(V - zB)"""

    U: Mat2
    V: Mat2
    invariants_in: Tuple[PencilInvariants, PencilInvariants]
    invariants_out: Tuple[PencilInvariants, PencilInvariants]

    @property
    def pair(self) -> Tuple[Mat2, Mat2]:
        return (self.U, self.V)

    def invariants_transferred(self, field) -> bool:
        """f_i(U) = f_i(X) and f_i(V) = f_i(Y)"""
        x_in, y_in = self.invariants_in
        u_out, v_out = self.invariants_out
        return u_out.matches(x_in, field) and v_out.matches(y_in, field)
