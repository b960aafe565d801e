"""Exact arithmetic in the cyclotomic field Q(zeta_M).

Elements are stored on the canonical basis 1, z, ..., z^(phi(M)-1) where z is
a primitive M-th root of unity, reduced modulo the M-th cyclotomic polynomial.
Internally a tuple of integer numerators over one common denominator keeps the
hot multiplication path free of per-coefficient gcd work; normalization
happens lazily.  Equality of complex numbers is decidable by coefficient
comparison.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Union

Scalar = Union[int, Fraction]


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Integer coefficients (low to high) of the m-th cyclotomic polynomial."""
    # Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, exact division over Z
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _exact_div(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


def _exact_div(num: list[int], den: list[int]) -> list[int]:
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        q, r = divmod(num[i + len(den) - 1], den[-1])
        assert r == 0
        out[i] = q
        for j, dc in enumerate(den):
            num[i + j] -= q * dc
    assert all(c == 0 for c in num)
    return out


@lru_cache(maxsize=None)
def cyclotomic_field(order: int) -> "CycloField":
    return CycloField(order)


class CycloField:
    """The field Q(zeta_M) with canonical reduction mod Phi_M."""

    def __init__(self, order: int):
        if order < 1:
            raise ValueError("order must be positive")
        self.order = order
        phi = cyclotomic_poly(order)
        self.degree = len(phi) - 1
        # x^e mod Phi_M for e = 0..M-1; integer vectors since Phi is monic
        table = []
        cur = [0] * self.degree
        if self.degree > 0:
            cur[0] = 1
        top = [-c for c in phi[:-1]]
        for _ in range(order):
            table.append(tuple(cur))
            carry = cur[-1]
            cur = [0] + cur[:-1]
            if carry:
                cur = [a + carry * b for a, b in zip(cur, top)]
        self._power_table = table
        self.zero = CycNum(self, (0,) * self.degree, 1)
        self.one = self.basis_power(0)

    def __repr__(self):
        return f"CycloField({self.order})"

    def from_rational(self, value: Scalar) -> "CycNum":
        value = Fraction(value)
        nums = [0] * self.degree
        nums[0] = value.numerator
        return CycNum(self, tuple(nums), value.denominator)

    def basis_power(self, e: int) -> "CycNum":
        """zeta_M^e, canonically reduced."""
        return CycNum(self, self._power_table[e % self.order], 1)

    def zeta(self, d: int, p: int = 1) -> "CycNum":
        """zeta_d^p embedded as zeta_M^(p*M/d)."""
        if d <= 0 or self.order % d != 0:
            raise ValueError(f"{d} does not divide the field order {self.order}")
        return self.basis_power((p % d) * (self.order // d))

    @property
    def i_unit(self) -> "CycNum":
        """sqrt(-1), available whenever 4 divides the order."""
        return self.zeta(4, 1)

    def coerce(self, value) -> "CycNum":
        if isinstance(value, CycNum):
            if value.field is not self:
                raise ValueError("mixed cyclotomic fields")
            return value
        if isinstance(value, (int, Fraction)):
            return self.from_rational(value)
        raise TypeError(f"cannot coerce {value!r}")


class CycNum:
    """Immutable element of a CycloField."""

    __slots__ = ("field", "nums", "den")

    def __init__(self, field: CycloField, nums: tuple, den: int):
        self.field = field
        self.nums = nums
        self.den = den

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self.den) for a in self.nums)

    def _reduced(self) -> "CycNum":
        g = math.gcd(self.den, *self.nums)
        if g in (0, 1):
            return self
        return CycNum(self.field, tuple(a // g for a in self.nums), self.den // g)

    def __add__(self, other):
        other = self.field.coerce(other)
        d1, d2 = self.den, other.den
        if d1 == d2:
            return CycNum(self.field, tuple(a + b for a, b in zip(self.nums, other.nums)), d1)
        return CycNum(
            self.field,
            tuple(a * d2 + b * d1 for a, b in zip(self.nums, other.nums)),
            d1 * d2,
        )._reduced()

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self.field.coerce(other))

    def __rsub__(self, other):
        return self.field.coerce(other) - self

    def __neg__(self):
        return CycNum(self.field, tuple(-a for a in self.nums), self.den)

    def __mul__(self, other):
        if isinstance(other, int):
            return CycNum(self.field, tuple(a * other for a in self.nums), self.den)._reduced()
        if isinstance(other, Fraction):
            return CycNum(
                self.field,
                tuple(a * other.numerator for a in self.nums),
                self.den * other.denominator,
            )._reduced()
        other = self.field.coerce(other)
        deg = self.field.degree
        if deg == 0:
            return self
        prod = [0] * (2 * deg - 1)
        for i, a in enumerate(self.nums):
            if a:
                for j, b in enumerate(other.nums):
                    if b:
                        prod[i + j] += a * b
        table = self.field._power_table
        out = prod[:deg]
        for e in range(deg, 2 * deg - 1):
            c = prod[e]
            if c:
                row = table[e]
                for k in range(deg):
                    if row[k]:
                        out[k] += c * row[k]
        return CycNum(self.field, tuple(out), self.den * other.den)._reduced()

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return CycNum(self.field, self.nums, self.den * other)._normalized_sign()
        if isinstance(other, Fraction):
            return self * Fraction(other.denominator, other.numerator)
        other = self.field.coerce(other)
        return self * other.inverse()

    def _normalized_sign(self) -> "CycNum":
        if self.den < 0:
            return CycNum(self.field, tuple(-a for a in self.nums), -self.den)._reduced()
        return self._reduced()

    def __rtruediv__(self, other):
        return self.field.coerce(other) / self

    def inverse(self) -> "CycNum":
        """Exact inverse via extended gcd against the cyclotomic polynomial."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        phi = [Fraction(c) for c in cyclotomic_poly(self.field.order)]
        r0, r1 = phi, _trim([Fraction(a, self.den) for a in self.nums])
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1 or r1[0] != 0:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        lead = r0[-1]
        inv = [c / lead for c in s0]
        out = [Fraction(0)] * self.field.degree
        table = self.field._power_table
        for e, c in enumerate(inv):
            if not c:
                continue
            for k, t in enumerate(table[e % self.field.order]):
                if t:
                    out[k] += c * t
        den = math.lcm(*(f.denominator for f in out)) if out else 1
        return CycNum(
            self.field, tuple(int(f * den) for f in out), den
        )._reduced()

    def __pow__(self, exponent: int) -> "CycNum":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        acc = self.field.one
        base = self
        e = exponent
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def conj(self) -> "CycNum":
        """Image under the Galois automorphism zeta -> zeta^(-1)."""
        return self.galois(-1)

    def galois(self, t: int) -> "CycNum":
        """Image under zeta -> zeta^t (t must be coprime to the order)."""
        if math.gcd(t % self.field.order, self.field.order) != 1:
            raise ValueError("not a Galois automorphism")
        table = self.field._power_table
        out = [0] * self.field.degree
        for e, c in enumerate(self.nums):
            if not c:
                continue
            row = table[(e * t) % self.field.order]
            for k in range(self.field.degree):
                if row[k]:
                    out[k] += c * row[k]
        return CycNum(self.field, tuple(out), self.den)._reduced()

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.nums)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.nums[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.field.order)
        return sum(float(c) * z**k for k, c in enumerate(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        if self.field is not other.field:
            return False
        a, b = self._reduced(), other._reduced()
        return a.nums == b.nums and a.den == b.den

    def __hash__(self):
        r = self._reduced()
        return hash((r.field.order, r.nums, r.den))

    def __repr__(self):
        return self.to_string()

    def to_string(self, symbol: str = "z") -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mono = symbol if k == 1 else f"{symbol}^{k}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}*{mono}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" + {p}" if not p.startswith("-") else f" - {p[1:]}"
        return out


def _trim(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_divmod(a: list, b: list):
    a = a[:]
    b = _trim(b)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / b[-1]
        q[i] = c
        for j, bc in enumerate(b):
            a[i + j] -= c * bc
    return _trim(q), _trim(a[: len(b) - 1] or [Fraction(0)])


def _poly_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])
