"""Shared ambient structures for a fixed cyclic order n.

Everything downstream works over Q(zeta_M) with M = lcm(4, 2n), in one of two
variable sets: the n multiplicative variables q_0..q_{n-1} (rational exponents
with denominator 2n), or the exponential-side variables u, x_1..x_{n-1}
(integer exponents).
"""

from __future__ import annotations

import math
from functools import lru_cache

from .cyclo import cyclotomic_field
from .series import VarSet
from .wreath import WreathCharTable, char_table


@lru_cache(maxsize=None)
def get_context(n: int) -> "Context":
    return Context(n)


class Context:
    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.field_order = math.lcm(4, 2 * n)
        self.field = cyclotomic_field(self.field_order)
        self.qvars = VarSet(self.field, tuple(f"q{i}" for i in range(n)), denom=2 * n)
        self.uxvars = VarSet(
            self.field, ("u",) + tuple(f"x{i}" for i in range(1, n)), denom=1
        )

    def zeta_n(self, p: int = 1):
        return self.field.zeta(self.n, p)

    def zeta_2n(self, p: int = 1):
        return self.field.zeta(2 * self.n, p)

    @property
    def i_unit(self):
        return self.field.i_unit

    def chars(self, d: int) -> WreathCharTable:
        return char_table(self.n, d, self.field_order)

    def __repr__(self):
        return f"Context(n={self.n})"
