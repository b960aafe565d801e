"""Character theory of the wreath products Z_n wr S_d.

Irreducible characters are computed by expanding products of twisted creation
operators on an n-component fermionic Fock space: for a conjugacy class given
by decorated parts (s, t), the operator sum_j zeta_n^(-t*j) a_(-s)^(j) is
applied for each part, and the coefficient of the basis vector labelled by an
n-tuple of partitions is the character value.  Everything is exact over a
cyclotomic field containing zeta_n.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .cyclo import CycloField, CycNum, cyclotomic_field
from .fock import add_strip, color_counts, combine_quotient, strip_sign
from .partitions import (
    Multipartition,
    classical_dim,
    irrep_labels,
    multipartitions,
    normalize,
    size,
    z_order,
)

Label = tuple[tuple[int, ...], ...]


def default_field_order(n: int) -> int:
    return math.lcm(4, 2 * n)


def _apply_part(state: dict, s: int, t: int, n: int, field: CycloField) -> dict:
    """Apply sum_j zeta_n^(-t*j) a_(-s)^(j) to a Fock state."""
    out: dict = {}
    roots = [field.zeta(n, (-t * j) % n) for j in range(n)]
    for label, c in state.items():
        for j in range(n):
            cj = c * roots[j]
            for new_comp, ht in add_strip(label[j], s):
                new_label = label[:j] + (new_comp,) + label[j + 1 :]
                val = cj * ((-1) ** ht)
                prev = out.get(new_label)
                out[new_label] = val if prev is None else prev + val
    return {k: v for k, v in out.items() if not v.is_zero()}


class WreathCharTable:
    """Full character table of Z_n wr S_d over Q(zeta_M)."""

    def __init__(self, n: int, d: int, field: CycloField | None = None):
        self.n = n
        self.d = d
        self.field = field or cyclotomic_field(default_field_order(n))
        self.classes = multipartitions(n, d)
        self.irreps = irrep_labels(n, d)
        self._table: dict = {}
        vacuum: Label = ((),) * n
        for mu in self.classes:
            state = {vacuum: self.field.one}
            for s, t in mu:
                state = _apply_part(state, s, t, n, self.field)
            for lam, c in state.items():
                self._table[(lam, mu)] = c

    def chi(self, lam: Label, mu: Multipartition) -> CycNum:
        return self._table.get((lam, normalize(mu)), self.field.zero)

    def z(self, mu: Multipartition) -> int:
        return z_order(self.n, mu)

    def group_order(self) -> int:
        return self.n**self.d * math.factorial(self.d)


@lru_cache(maxsize=None)
def char_table(n: int, d: int, field_order: int | None = None) -> WreathCharTable:
    field = cyclotomic_field(field_order) if field_order else None
    return WreathCharTable(n, d, field)


def dimension(lam: Label) -> int:
    """Dimension of the wreath irrep: multinomial times product of hook dims."""
    d = sum(sum(p) for p in lam)
    out = math.factorial(d)
    for comp in lam:
        out //= math.factorial(sum(comp))
        out *= classical_dim(comp)
    return out


def sign_quotient_ratio(lam: Label) -> int:
    """Character on the class of d parts of size n, untwisted, divided by the
    dimension; computed as a strip-sequence sign on the combined partition."""
    return strip_sign(combine_quotient(lam), len(lam))


def central_transposition(lam: Label) -> int:
    """Sum of contents over color-0 boxes of the combined partition."""
    n = len(lam)
    combined = combine_quotient(lam)
    out = 0
    for i, row in enumerate(combined, start=1):
        for j in range(1, row + 1):
            if (j - i) % n == 0:
                out += j - i
    return out


def central_twist(lam: Label, i: int, field: CycloField) -> CycNum:
    """sum_j zeta_n^(-i*j) * |lam^j|."""
    n = len(lam)
    out = field.zero
    for j, comp in enumerate(lam):
        out = out + field.zeta(n, (-i * j) % n) * sum(comp)
    return out


def central_transposition_via_table(table: WreathCharTable, lam: Label) -> Fraction:
    """n*d*(d-1)/2 times the normalized character on one untwisted 2-part."""
    n, d = table.n, table.d
    if d < 2:
        return Fraction(0)
    mu = normalize([(2, 0)] + [(1, 0)] * (d - 2))
    val = table.chi(lam, mu) * Fraction(n * d * (d - 1), 2) / dimension(lam)
    return val.as_rational()


def central_twist_via_table(table: WreathCharTable, lam: Label, i: int) -> CycNum:
    """d times the normalized character on one part of size 1 with twist i."""
    d = table.d
    mu = normalize([(1, i % table.n)] + [(1, 0)] * (d - 1))
    return table.chi(lam, mu) * Fraction(d, dimension(lam))
