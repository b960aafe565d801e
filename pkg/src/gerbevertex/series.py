"""Truncated multivariate Laurent/Puiseux series with exact coefficients.

Exponents are rationals with a fixed common denominator per variable set;
internally every exponent is stored as an integer multiple of 1/denom, and all
degree bookkeeping (truncation order, valuations) happens in these scaled
integer units.  A series carries a precision `prec`: coefficients of total
degree < prec are exact, everything at degree >= prec is discarded.  Supports
for Laurent terms may be negative but are always finite, hence bounded below.
"""

from __future__ import annotations

import math
from fractions import Fraction

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover
    mpz = int

from .cyclo import CycloField, CycNum

INF = math.inf


class VarSet:
    """An ordered set of variables over a cyclotomic field, with a common
    exponent denominator."""

    def __init__(self, field: CycloField, names: tuple[str, ...], denom: int = 1):
        self.field = field
        self.names = tuple(names)
        self.denom = denom

    def __repr__(self):
        return f"VarSet({self.names}, denom={self.denom})"

    def __eq__(self, other):
        return (
            isinstance(other, VarSet)
            and self.field is other.field
            and self.names == other.names
            and self.denom == other.denom
        )

    def __hash__(self):
        return hash((id(self.field), self.names, self.denom))

    def scale_exponent(self, e) -> int:
        s = Fraction(e) * self.denom
        if s.denominator != 1:
            raise ValueError(f"exponent {e} not a multiple of 1/{self.denom}")
        return int(s)

    def key(self, exponents: dict) -> tuple[int, ...]:
        """Scaled exponent tuple from a {name: rational} mapping."""
        out = [0] * len(self.names)
        for name, e in exponents.items():
            out[self.names.index(name)] = self.scale_exponent(e)
        return tuple(out)

    def zero(self, prec=INF) -> "PuiseuxSeries":
        return PuiseuxSeries(self, {}, prec)

    def one(self, prec=INF) -> "PuiseuxSeries":
        return self.const(1, prec)

    def const(self, c, prec=INF) -> "PuiseuxSeries":
        c = self.field.coerce(c)
        zero_key = (0,) * len(self.names)
        terms = {} if c.is_zero() else {zero_key: c}
        return PuiseuxSeries(self, terms, prec)

    def monomial(self, exponents: dict, coeff=1, prec=INF) -> "PuiseuxSeries":
        c = self.field.coerce(coeff)
        if c.is_zero():
            return self.zero(prec)
        return PuiseuxSeries(self, {self.key(exponents): c}, prec)

    def gen(self, name: str, prec=INF) -> "PuiseuxSeries":
        return self.monomial({name: 1}, 1, prec)


class PuiseuxSeries:
    """A truncated Laurent/Puiseux series: finitely many exact terms below
    the precision cutoff."""

    __slots__ = ("vs", "terms", "prec")

    def __init__(self, vs: VarSet, terms: dict, prec=INF, _normalized=False):
        self.vs = vs
        self.prec = prec
        if not _normalized:
            terms = {
                k: c
                for k, c in terms.items()
                if sum(k) < prec and not c.is_zero()
            }
        self.terms = terms

    def lowest(self):
        """Scaled degree of the lowest term (prec for an empty tail)."""
        return min((sum(k) for k in self.terms), default=self.prec)

    def _coerce(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            return self.vs.const(other)
        if isinstance(other, PuiseuxSeries):
            if other.vs != self.vs:
                raise ValueError("mixed variable sets")
            return other
        raise TypeError(f"cannot coerce {other!r}")

    def __add__(self, other):
        other = self._coerce(other)
        prec = min(self.prec, other.prec)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k)
            terms[k] = c if s is None else s + c
        return PuiseuxSeries(self.vs, terms, prec)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return PuiseuxSeries(
            self.vs, {k: -c for k, c in self.terms.items()}, self.prec, _normalized=True
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            c = self.vs.field.coerce(other)
            if c.is_zero():
                return self.vs.zero(self.prec)
            return PuiseuxSeries(
                self.vs, {k: v * c for k, v in self.terms.items()}, self.prec,
                _normalized=True,
            )
        other = self._coerce(other)
        prec = min(self.prec + other.lowest(), other.prec + self.lowest())
        if len(self.terms) >= 20 and len(other.terms) >= 20:
            return _packed_mul(self, other, prec)
        terms: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                if sum(k) >= prec:
                    continue
                c = c1 * c2
                s = terms.get(k)
                terms[k] = c if s is None else s + c
        return PuiseuxSeries(self.vs, terms, prec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            c = self.vs.field.coerce(other)
            return self * c.inverse()
        return self * self._coerce(other).invert()

    def truncate(self, prec) -> "PuiseuxSeries":
        prec = min(prec, self.prec)
        return PuiseuxSeries(self.vs, self.terms, prec)

    def shift(self, key: tuple[int, ...]) -> "PuiseuxSeries":
        """Multiply by the monomial with the given scaled exponent tuple."""
        d = sum(key)
        return PuiseuxSeries(
            self.vs,
            {tuple(a + b for a, b in zip(k, key)): c for k, c in self.terms.items()},
            self.prec + d,
            _normalized=True,
        )

    def leading(self):
        """(key, coeff) of the unique lowest-degree term.

        Raises if the bottom degree is shared by several monomials, since the
        series is then not invertible in this representation.
        """
        if not self.terms:
            raise ZeroDivisionError("no leading term: series is zero to its precision")
        d0 = self.lowest()
        mins = [k for k in self.terms if sum(k) == d0]
        if len(mins) != 1:
            raise ValueError(f"leading part is not a single monomial: {mins}")
        return mins[0], self.terms[mins[0]]

    def invert(self) -> "PuiseuxSeries":
        """Inverse, valid when the lowest-degree part is a single monomial."""
        key, c = self.leading()
        d0 = sum(key)
        if len(self.terms) == 1:
            prec = INF if self.prec is INF else self.prec - 2 * d0
            return PuiseuxSeries(
                self.vs, {tuple(-a for a in key): c.inverse()}, prec, _normalized=True
            )
        if self.prec is INF:
            raise ValueError("cannot invert a series of infinite precision; truncate first")
        p_unit = self.prec - d0
        unit = self.shift(tuple(-a for a in key)) * c.inverse()
        acc = unit._invert_unit(p_unit)
        return acc.shift(tuple(-a for a in key)) * c.inverse()

    def _invert_unit(self, p_unit):
        """Inverse of a series with constant term 1."""
        if len(self.terms) > 40:
            # Newton iteration x -> x(2 - fx), doubling the exact order each
            # round; the precision is set by the iteration invariant, not by
            # the generic product bookkeeping.
            x = self.vs.one(1)
            cur = 1
            while cur < p_unit:
                cur = min(2 * cur, p_unit)
                x = PuiseuxSeries(self.vs, x.terms, cur, _normalized=True)
                f = self.truncate(cur)
                upd = (x * (2 - f * x)).truncate(cur)
                x = PuiseuxSeries(self.vs, upd.terms, cur, _normalized=True)
            return PuiseuxSeries(self.vs, x.terms, p_unit, _normalized=True)
        field = self.vs.field
        by_deg: dict[int, dict] = {}
        for k, c in self.terms.items():
            d = sum(k)
            if 0 < d < p_unit:
                by_deg.setdefault(d, {})[k] = c
        zero_key = (0,) * len(self.vs.names)
        out_by_deg: dict[int, dict] = {0: {zero_key: field.one}}
        for d in range(1, math.ceil(p_unit)):
            acc: dict = {}
            for e, he in by_deg.items():
                lower = out_by_deg.get(d - e)
                if e > d or not lower:
                    continue
                for k1, c1 in he.items():
                    for k2, c2 in lower.items():
                        k = tuple(a + b for a, b in zip(k1, k2))
                        v = c1 * c2
                        s = acc.get(k)
                        acc[k] = -v if s is None else s - v
            acc = {k: c for k, c in acc.items() if not c.is_zero()}
            if acc:
                out_by_deg[d] = acc
        terms = {}
        for bucket in out_by_deg.values():
            terms.update(bucket)
        return PuiseuxSeries(self.vs, terms, p_unit, _normalized=True)

    def exp(self) -> "PuiseuxSeries":
        """exp of a series with strictly positive valuation."""
        if self.lowest() < 1 and self.terms:
            raise ValueError("exp requires positive valuation")
        if self.prec is INF:
            if not self.terms:
                return self.vs.one()
            raise ValueError("exp of a nonzero series needs finite precision")
        acc = self.vs.one(self.prec)
        power = self.vs.one(self.prec)
        low = self.lowest()
        k = 1
        fact = 1
        while k * low < self.prec:
            power = (power * self).truncate(self.prec)
            if not power.terms:
                break
            fact *= k
            acc = acc + power * Fraction(1, fact)
            k += 1
        return acc

    def log(self) -> "PuiseuxSeries":
        """log of a series with constant term 1."""
        zero_key = (0,) * len(self.vs.names)
        if self.terms.get(zero_key) != self.vs.field.one:
            raise ValueError("log requires constant term 1")
        g = self - 1
        if self.prec is INF:
            if not g.terms:
                return self.vs.zero()
            raise ValueError("log of a non-constant series needs finite precision")
        low = g.lowest()
        acc = self.vs.zero(self.prec)
        power = self.vs.one(self.prec)
        k = 1
        while k * low < self.prec:
            power = (power * g).truncate(self.prec)
            if not power.terms:
                break
            acc = acc + power * Fraction((-1) ** (k + 1), k)
            k += 1
        return acc

    def __pow__(self, e: int) -> "PuiseuxSeries":
        if e < 0:
            return self.invert() ** (-e)
        acc = self.vs.one(self.prec if e else INF)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            e >>= 1
            if e:
                base = base * base
        return acc

    def coeff(self, exponents: dict) -> CycNum:
        """Exact coefficient of a monomial; raises beyond the precision."""
        key = self.vs.key(exponents)
        if sum(key) >= self.prec:
            raise ValueError(f"coefficient at degree {sum(key)} exceeds precision {self.prec}")
        return self.terms.get(key, self.vs.field.zero)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        """Agreement of all coefficients below the smaller precision."""
        other = self._coerce(other)
        prec = min(self.prec, other.prec)
        for k in set(self.terms) | set(other.terms):
            if sum(k) >= prec:
                continue
            if self.terms.get(k, self.vs.field.zero) != other.terms.get(k, self.vs.field.zero):
                return False
        return True

    def __repr__(self):
        items = sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        parts = []
        for k, c in items[:12]:
            mono = "*".join(
                f"{n}^{Fraction(e, self.vs.denom)}"
                for n, e in zip(self.vs.names, k)
                if e
            )
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        body = " + ".join(parts) if parts else "0"
        if len(items) > 12:
            body += " + ..."
        tail = "" if self.prec is INF else f" + O(deg {Fraction(int(self.prec), self.vs.denom) if self.prec is not INF else ''})"
        return body + tail


class FactoredSeries:
    """coeff * monomial * prod (1 - m_v)^(e_v), kept in closed form.

    `mono` is a scaled exponent tuple; `factors` maps scaled exponent tuples v
    (each of positive total degree) of the monomials m_v to integer exponents
    e_v of the binomial factors.  This closed form is what gets substituted
    into exponential variables, where a fully expanded series would not make
    sense term by term.
    """

    __slots__ = ("vs", "coeff", "mono", "factors")

    def __init__(self, vs: VarSet, coeff: CycNum, mono: tuple[int, ...], factors: dict):
        self.vs = vs
        self.coeff = coeff
        self.mono = mono
        self.factors = {v: e for v, e in factors.items() if e}

    @classmethod
    def unit(cls, vs: VarSet) -> "FactoredSeries":
        return cls(vs, vs.field.one, (0,) * len(vs.names), {})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            return FactoredSeries(
                self.vs, self.coeff * self.vs.field.coerce(other), self.mono, self.factors
            )
        if not isinstance(other, FactoredSeries) or other.vs != self.vs:
            raise TypeError("can only multiply by a FactoredSeries on the same variables")
        factors = dict(self.factors)
        for v, e in other.factors.items():
            factors[v] = factors.get(v, 0) + e
        return FactoredSeries(
            self.vs,
            self.coeff * other.coeff,
            tuple(a + b for a, b in zip(self.mono, other.mono)),
            factors,
        )

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "FactoredSeries":
        if e < 0:
            return self.inverse() ** (-e)
        out = FactoredSeries.unit(self.vs)
        for _ in range(e):
            out = out * self
        return out

    def inverse(self) -> "FactoredSeries":
        return FactoredSeries(
            self.vs,
            self.coeff.inverse(),
            tuple(-a for a in self.mono),
            {v: -e for v, e in self.factors.items()},
        )

    def times_monomial(self, exponents: dict, coeff=1) -> "FactoredSeries":
        return self * FactoredSeries(
            self.vs, self.vs.field.coerce(coeff), self.vs.key(exponents), {}
        )

    def times_binomial(self, exponents: dict, power: int = 1) -> "FactoredSeries":
        """Multiply by (1 - m)^power for the monomial m."""
        v = self.vs.key(exponents)
        if sum(v) <= 0:
            raise ValueError("binomial factors need positive-degree monomials")
        factors = dict(self.factors)
        factors[v] = factors.get(v, 0) + power
        return FactoredSeries(self.vs, self.coeff, self.mono, factors)

    def expand(self, prec) -> PuiseuxSeries:
        """Expanded truncated series, exact below the scaled degree `prec`."""
        d0 = sum(self.mono)
        p_unit = prec - d0
        unit = self.vs.const(self.coeff, p_unit)
        for v, e in sorted(self.factors.items()):
            dv = sum(v)
            if dv <= 0:
                raise ValueError("binomial factor with nonpositive degree")
            if e >= 0:
                binom = self.vs.one(p_unit) - PuiseuxSeries(self.vs, {v: self.vs.field.one}, p_unit)
                for _ in range(e):
                    unit = unit * binom
            else:
                geom_terms = {}
                j = 0
                while j * dv < p_unit:
                    geom_terms[tuple(j * a for a in v)] = self.vs.field.one
                    j += 1
                geom = PuiseuxSeries(self.vs, geom_terms, p_unit)
                for _ in range(-e):
                    unit = unit * geom
        return unit.shift(self.mono)

    def __repr__(self):
        mono = "*".join(
            f"{n}^{Fraction(e, self.vs.denom)}" for n, e in zip(self.vs.names, self.mono) if e
        )
        fs = " * ".join(
            "(1 - "
            + "*".join(f"{n}^{Fraction(a, self.vs.denom)}" for n, a in zip(self.vs.names, v) if a)
            + f")^{e}"
            for v, e in sorted(self.factors.items())
        )
        bits = [f"({self.coeff})"]
        if mono:
            bits.append(mono)
        if fs:
            bits.append(fs)
        return " * ".join(bits)


def _common_den(f: PuiseuxSeries) -> int:
    den = 1
    for c in f.terms.values():
        den = den * (c.den // math.gcd(den, c.den))
    return den


def _max_scaled_num(f: PuiseuxSeries, den: int) -> int:
    out = 1
    for c in f.terms.values():
        scale = den // c.den
        for n in c.nums:
            if abs(n) * scale > out:
                out = abs(n) * scale
    return out


def _pack_bands(f: PuiseuxSeries, den, rmins, strides, nslots, width):
    """Group terms by the exponent of the first variable; Kronecker-pack the
    remaining variables into one (positive, negative) big integer per
    cyclotomic basis slot."""
    deg = f.vs.field.degree
    raw: dict[int, tuple] = {}
    for k, c in f.terms.items():
        e0 = k[0]
        band = raw.get(e0)
        if band is None:
            band = raw[e0] = (
                [bytearray(nslots * width) for _ in range(deg)],
                [bytearray(nslots * width) for _ in range(deg)],
                [sum(k) - e0],
            )
        idx = 0
        for e, m, s in zip(k[1:], rmins, strides):
            idx += (e - m) * s
        off = idx * width
        band[2][0] = min(band[2][0], sum(k) - e0)
        scale = den // c.den
        for t, n in enumerate(c.nums):
            if not n:
                continue
            v = n * scale
            buf = band[0] if v > 0 else band[1]
            buf[t][off : off + width] = abs(v).to_bytes(width, "little")
    out = {}
    for e0, (pos, neg, mr) in raw.items():
        out[e0] = (
            [mpz(int.from_bytes(p, "little")) for p in pos],
            [mpz(int.from_bytes(p, "little")) for p in neg],
            mr[0],
        )
    return out


def _packed_mul(a: PuiseuxSeries, b: PuiseuxSeries, prec) -> PuiseuxSeries:
    """Exact product via big-integer convolution per cyclotomic basis pair,
    banded by the first variable so truncation skips irrelevant work."""
    vs = a.vs
    field = vs.field
    deg = field.degree
    nv = len(vs.names)
    if not a.terms or not b.terms:
        return PuiseuxSeries(vs, {}, prec, _normalized=True)
    rest = range(1, nv)
    rmins = [min(k[i] for k in a.terms) + min(k[i] for k in b.terms) for i in rest]
    rmins_a = [min(k[i] for k in a.terms) for i in rest]
    rmins_b = [min(k[i] for k in b.terms) for i in rest]
    ranges = [
        max(k[i] for k in a.terms)
        - rmins_a[i - 1]
        + max(k[i] for k in b.terms)
        - rmins_b[i - 1]
        + 1
        for i in rest
    ]
    strides = [1] * (nv - 1)
    for i in range(1, nv - 1):
        strides[i] = strides[i - 1] * ranges[i - 1]
    nslots = (strides[-1] * ranges[-1]) if nv > 1 else 1

    den_a, den_b = _common_den(a), _common_den(b)
    bits = (
        _max_scaled_num(a, den_a).bit_length()
        + _max_scaled_num(b, den_b).bit_length()
        + min(len(a.terms), len(b.terms)).bit_length()
        + 10
    )
    width = (bits + 7) // 8

    bands_a = _pack_bands(a, den_a, rmins_a, strides, nslots, width)
    bands_b = _pack_bands(b, den_b, rmins_b, strides, nslots, width)

    size = 2 * deg - 1
    zero = mpz(0)
    acc: dict[int, list] = {}
    for e0a, (pa, na_, mra) in bands_a.items():
        for e0b, (pb, nb_, mrb) in bands_b.items():
            e0 = e0a + e0b
            if e0 + mra + mrb >= prec:
                continue
            band = acc.get(e0)
            if band is None:
                band = acc[e0] = [[zero] * size, [zero] * size]
            P, N = band
            for i in range(deg):
                ai, bi = pa[i], na_[i]
                if not ai and not bi:
                    continue
                for j in range(deg):
                    aj, bj = pb[j], nb_[j]
                    if not aj and not bj:
                        continue
                    P[i + j] += ai * aj + bi * bj
                    N[i + j] += ai * bj + bi * aj

    table = field._power_table
    den = den_a * den_b
    shift = rmins
    terms = {}
    for e0, (P, N) in acc.items():
        for e in range(size - 1, deg - 1, -1):
            rp, rn = P[e], N[e]
            if not rp and not rn:
                continue
            row = table[e]
            for k in range(deg):
                r = row[k]
                if r > 0:
                    P[k] += r * rp
                    N[k] += r * rn
                elif r < 0:
                    P[k] += (-r) * rn
                    N[k] += (-r) * rp
        pbytes = [int(x).to_bytes(nslots * width + 16, "little") for x in P[:deg]]
        nbytes = [int(x).to_bytes(nslots * width + 16, "little") for x in N[:deg]]
        for s in range(nslots):
            off = s * width
            nums = []
            nonzero = False
            for t in range(deg):
                chunk_p = pbytes[t][off : off + width]
                chunk_n = nbytes[t][off : off + width]
                if chunk_p == chunk_n:
                    nums.append(0)
                    continue
                v = int.from_bytes(chunk_p, "little") - int.from_bytes(chunk_n, "little")
                nums.append(v)
                if v:
                    nonzero = True
            if not nonzero:
                continue
            rem = s
            key = [0] * nv
            key[0] = e0
            for i in range(nv - 1, 1, -1):
                q, rem = divmod(rem, strides[i - 1])
                key[i] = q + shift[i - 1]
            if nv > 1:
                key[1] = rem + shift[0]
            key = tuple(key)
            if sum(key) >= prec:
                continue
            terms[key] = CycNum(field, tuple(nums), den)._reduced()
    return PuiseuxSeries(vs, terms, prec, _normalized=True)


def series_to_json(f: PuiseuxSeries) -> dict:
    """Deterministic JSON form: terms sorted by degree then exponents."""
    items = sorted(f.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    return {
        "variables": list(f.vs.names),
        "order": None if f.prec is INF else str(Fraction(int(f.prec), f.vs.denom)),
        "terms": [
            {
                "exponents": [str(Fraction(e, f.vs.denom)) for e in k],
                "coeff": c.to_string(),
            }
            for k, c in items
        ],
    }
