"""Framed vertex generating functions and the change of variables between
the multiplicative and exponential presentations.

The one-leg vertex is computed on two sides: a closed-form product over a
colored Young diagram in the q variables, and character-weighted sums in the
exponential variables u, x_1..x_{n-1}.  The bridge substitutes each q variable
by a root of unity times an exponential of a linear form in (u, x); it acts on
the closed product form, never termwise on expanded series.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .context import Context
from .cyclo import CycNum
from .fock import combine_quotient, strip_sign
from .loopschur import content_monomial_key, loop_schur_closed
from .partitions import Multipartition, size, twisted_part, untwisted_part
from .series import FactoredSeries, PuiseuxSeries
from .wreath import Label, central_transposition, central_twist

# ---------------------------------------------------------------------------
# the vertex in the q variables


def framing_root(ctx: Context, lam: Label) -> CycNum:
    """(-zeta_2n)^d * prod_l zeta_n^(l * |lam_l|)."""
    d = sum(sum(c) for c in lam)
    out = (-ctx.zeta_2n()) ** d
    for l, comp in enumerate(lam):
        out = out * ctx.zeta_n(l * sum(comp))
    return out


def dt_vertex_q(ctx: Context, lam: Label, a: Fraction = Fraction(0)) -> FactoredSeries:
    """The framed one-leg vertex as a closed q-variable product."""
    n = ctx.n
    d = sum(sum(c) for c in lam)
    lam_bar = combine_quotient(lam)
    schur = loop_schur_closed(ctx, lam_bar)
    sign = strip_sign(lam_bar, n) * (-1) ** d
    halfq = (n * d,) * n  # (q_0...q_{n-1})^(d/2)
    out = FactoredSeries(
        ctx.qvars,
        schur.coeff * sign,
        tuple(m + h for m, h in zip(schur.mono, halfq)),
        schur.factors,
    )
    a = Fraction(a)
    if a:
        na = a * n
        if na.denominator != 1:
            raise ValueError("framing must lie in (1/n)Z for the q-side form")
        const = framing_root(ctx, lam) ** (-int(na))
        frame_key = content_monomial_key(ctx, lam_bar, ctx.n)  # full content monomial
        shift = tuple(-_int(a * e) for e in frame_key)
        out = FactoredSeries(
            ctx.qvars, out.coeff * const, tuple(m + s for m, s in zip(out.mono, shift)),
            out.factors,
        )
    return out


def _int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ValueError(f"fractional exponent {x} does not clear the denominator")
    return int(x)


# ---------------------------------------------------------------------------
# change of variables q -> exponentials


class ChangeOfVariables:
    """q_0...q_{n-1} -> e^(iu); each q_k (k>0) -> zeta_n^(-1) times an
    exponential linear in x."""

    def __init__(self, ctx: Context):
        self.ctx = ctx
        n = ctx.n
        # coefficient of x_i in the exponent attached to one power of q_k
        self._xcoef = {}
        for k in range(1, n):
            coefs = {}
            for i in range(1, n):
                coefs[i] = (
                    ctx.zeta_n(-i * k)
                    * (ctx.zeta_2n(i) - ctx.zeta_2n(-i))
                    * Fraction(-1, n)
                )
            self._xcoef[k] = coefs
        self._factor_cache: dict = {}

    def _is_unit_leading(self, key: tuple[int, ...]) -> bool:
        """Whether the image of the q-monomial has constant term 1 (so that
        1 minus it vanishes at the origin)."""
        n = self.ctx.n
        D = 2 * n
        total = sum((key[k] - key[0]) // D for k in range(1, n))
        return total % n == 0

    @staticmethod
    def _is_pure_u(key: tuple[int, ...]) -> bool:
        """Whether the image of the q-monomial depends on u alone."""
        return all(e == key[0] for e in key)

    def monomial_image(self, key: tuple[int, ...], prec) -> PuiseuxSeries:
        """Image of the q-monomial with scaled exponent tuple `key`."""
        ctx = self.ctx
        n = ctx.n
        D = 2 * n
        e0 = key[0]
        cks = []
        for k in range(1, n):
            diff = key[k] - e0
            if diff % D:
                raise ValueError("relative exponent not integral; no image in this chart")
            cks.append(diff // D)
        vs = ctx.uxvars
        const = ctx.zeta_n(-sum(cks) % n) if n > 1 else ctx.field.one
        terms = {}
        ucoef = ctx.i_unit * Fraction(e0, D)
        if not ucoef.is_zero():
            terms[vs.key({"u": 1})] = ucoef
        for i in range(1, n):
            c = ctx.field.zero
            for k in range(1, n):
                if cks[k - 1]:
                    c = c + self._xcoef[k][i] * cks[k - 1]
            if not c.is_zero():
                terms[vs.key({f"x{i}": 1})] = c
        w = PuiseuxSeries(vs, terms, prec)
        return w.exp() * const

    def _binomial_power(self, v: tuple[int, ...], e: int, wp) -> PuiseuxSeries:
        """(1 - image(v))^e at working precision wp, cached."""
        key = (v, e, wp)
        hit = self._factor_cache.get(key)
        if hit is not None:
            return hit
        if e in (1, -1):
            base = self.ctx.uxvars.one(wp) - self.monomial_image(v, wp)
            out = base if e == 1 else base.invert()
        else:
            half = self._binomial_power(v, e // 2, wp)
            out = half * half
            if e % 2:
                out = out * self._binomial_power(v, e - 2 * (e // 2), wp)
            out = out.truncate(wp if e > 0 else out.prec)
        self._factor_cache[key] = out
        return out

    def factored_image(self, fs: FactoredSeries, prec) -> PuiseuxSeries:
        """Image of a closed product form, exact below degree `prec` in (u,x).

        Factors whose image depends on u alone are collected separately: they
        carry the whole Laurent tail (and are cheap to expand at extra
        precision), so the dense multivariate part only needs a margin equal
        to the Laurent depth."""
        pure = {}
        mixed = {}
        for v, e in fs.factors.items():
            if self._is_unit_leading(v):
                if not self._is_pure_u(v):
                    raise NotImplementedError(
                        "unit-leading factor with x-dependence cannot be expanded"
                    )
                pure[v] = e
            else:
                mixed[v] = e
        low_pure = sum(pure.values())
        margin = max(0, -low_pure)
        wp = prec + margin
        img = self.monomial_image(fs.mono, wp) * fs.coeff
        for v, e in sorted(mixed.items()):
            img = img * self._binomial_power(v, e, wp)
        wp_u = prec + 2 * margin + 2
        upart = None
        for v, e in sorted(pure.items()):
            f = self._binomial_power(v, e, wp_u)
            upart = f if upart is None else upart * f
        if upart is not None:
            img = img * upart
        if img.prec < prec:
            raise ValueError("precision bookkeeping failed; increase the margin")
        return img.truncate(prec)


_cov_cache: dict = {}
_ux_cache: dict = {}


def get_cov(ctx: Context) -> ChangeOfVariables:
    cov = _cov_cache.get(ctx.n)
    if cov is None:
        cov = _cov_cache[ctx.n] = ChangeOfVariables(ctx)
    return cov


def _dt_vertex_ux_unframed(ctx: Context, lam: Label, prec) -> PuiseuxSeries:
    key = (ctx.n, lam, prec)
    hit = _ux_cache.get(key)
    if hit is None:
        hit = _ux_cache[key] = get_cov(ctx).factored_image(dt_vertex_q(ctx, lam), prec)
    return hit


# ---------------------------------------------------------------------------
# the vertex in the exponential variables


_framing_cache: dict = {}


def framing_factor_ux(ctx: Context, lam: Label, a: Fraction, prec) -> PuiseuxSeries:
    """exp(-a(i f_T u + sum_k zeta_2n^(-k) f_k x_k)); the closed-form image of
    the framing prefactor, valid for arbitrary rational a."""
    vs = ctx.uxvars
    a = Fraction(a)
    if not a:
        return vs.one(prec)
    cache_key = (ctx.n, lam, a, prec)
    hit = _framing_cache.get(cache_key)
    if hit is not None:
        return hit
    terms = {}
    ft = central_transposition(lam)
    ucoef = ctx.i_unit * (-a * ft)
    if not ucoef.is_zero():
        terms[vs.key({"u": 1})] = ucoef
    for k in range(1, ctx.n):
        c = ctx.zeta_2n(-k) * central_twist(lam, k, ctx.field) * (-a)
        if not c.is_zero():
            terms[vs.key({f"x{k}": 1})] = c
    out = PuiseuxSeries(vs, terms, prec).exp()
    _framing_cache[cache_key] = out
    return out


def dt_vertex_ux(ctx: Context, lam: Label, a: Fraction, prec) -> PuiseuxSeries:
    return _dt_vertex_ux_unframed(ctx, lam, prec) * framing_factor_ux(ctx, lam, a, prec)


_gw_cache: dict = {}


def gw_vertex(ctx: Context, mu: Multipartition, a: Fraction, prec) -> PuiseuxSeries:
    """The one-leg vertex attached to a conjugacy class, in (u, x)."""
    a = Fraction(a)
    cache_key = (ctx.n, mu, a, prec)
    hit = _gw_cache.get(cache_key)
    if hit is not None:
        return hit
    d = size(mu)
    table = ctx.chars(d)
    z = table.z(mu)
    out = ctx.uxvars.zero(prec)
    for lam in table.irreps:
        c = table.chi(lam, mu)
        if c.is_zero():
            continue
        out = out + dt_vertex_ux(ctx, lam, a, prec) * (c / z)
    _gw_cache[cache_key] = out
    return out


def csc_half_series(ctx: Context, m: Fraction, prec) -> PuiseuxSeries:
    """Laurent expansion of 1/sin(m*u/2) in u."""
    vs = ctx.uxvars
    m = Fraction(m)
    terms = {}
    j = 0
    fact = 1
    while 2 * j + 1 < prec + 2:
        fact = math.factorial(2 * j + 1)
        terms[vs.key({"u": 2 * j + 1})] = ctx.field.from_rational(
            Fraction((-1) ** j, fact) * (m / 2) ** (2 * j + 1)
        )
        j += 1
    return PuiseuxSeries(vs, terms, prec + 2).invert().truncate(prec)


def untwisted_vertex_closed(ctx: Context, tau: Multipartition, prec) -> PuiseuxSeries:
    """Closed form for the unframed vertex of a purely untwisted class."""
    if twisted_part(tau):
        raise ValueError("closed form only applies to untwisted classes")
    from .partitions import z_order

    out = ctx.uxvars.one(prec) * Fraction(1, z_order(ctx.n, tau))
    for s, _ in tau:
        out = out * csc_half_series(ctx, Fraction(s), prec) * (
            ctx.i_unit * Fraction((-1) ** s, 2)
        )
    return out


# ---------------------------------------------------------------------------
# verification of the framing substitution and the three reductions


def verify_frame(ctx: Context, lam: Label, prec) -> bool:
    """The content monomial substitutes to the closed exponential form, and
    the constants cancel against the framing root."""
    lam_bar = combine_quotient(lam)
    d = sum(sum(c) for c in lam)
    cov = get_cov(ctx)
    key = content_monomial_key(ctx, lam_bar, ctx.n)
    lhs = cov.monomial_image(key, prec)
    const = (-ctx.zeta_2n()) ** (-d)
    for k, comp in enumerate(lam):
        const = const * ctx.zeta_n((-k * sum(comp)) % ctx.n)
    vs = ctx.uxvars
    terms = {vs.key({"u": 1}): ctx.i_unit * central_transposition(lam)}
    for k in range(1, ctx.n):
        c = ctx.zeta_2n(-k) * central_twist(lam, k, ctx.field)
        if not c.is_zero():
            terms[vs.key({f"x{k}": 1})] = c
    rhs = PuiseuxSeries(vs, terms, prec).exp() * const**ctx.n
    roots_cancel = (framing_root(ctx, lam) * const) == 1
    return roots_cancel and lhs == rhs


def verify_reduction_one(ctx: Context, mu: Multipartition, order: int) -> bool:
    """Untwisted parts factor out of the unframed vertex as csc factors."""
    from .partitions import z_order

    un = untwisted_part(mu)
    tw = twisted_part(mu)
    prec = order + len(un) + 1
    lhs = gw_vertex(ctx, mu, Fraction(0), prec)
    rhs = ctx.uxvars.one(prec) * Fraction(1, z_order(ctx.n, un))
    for s, _ in un:
        rhs = rhs * csc_half_series(ctx, Fraction(s), prec) * (
            ctx.i_unit * Fraction((-1) ** s, 2)
        )
    if size(tw):
        rhs = rhs * gw_vertex(ctx, tw, Fraction(0), prec)
    return lhs.truncate(order) == rhs.truncate(order)


def _char_weighted_sum_q(ctx: Context, mu: Multipartition, prec_scaled, extra_key=None):
    """sum over irreps of chi(mu) times the expanded q-side vertex."""
    d = size(mu)
    table = ctx.chars(d)
    out = ctx.qvars.zero(prec_scaled)
    for lam in table.irreps:
        c = table.chi(lam, mu)
        if c.is_zero():
            continue
        fs = dt_vertex_q(ctx, lam)
        if extra_key is not None:
            key = extra_key(combine_quotient(lam))
            fs = FactoredSeries(
                ctx.qvars, fs.coeff, tuple(m + k for m, k in zip(fs.mono, key)), fs.factors
            )
        out = out + fs.expand(prec_scaled) * c
    return out


def verify_reduction_two(ctx: Context, mu: Multipartition, k: int, order: int) -> bool:
    """Adding an untwisted part of size k multiplies the character sum by
    (-1)^k q^(k/2) / (1 - q^k), natively in the q variables."""
    n = ctx.n
    prec = order * 2 * n
    big = _char_weighted_sum_q(ctx, mu + ((k, 0),), prec)
    small = _char_weighted_sum_q(ctx, mu, prec)
    factor = FactoredSeries(
        ctx.qvars,
        ctx.field.from_rational((-1) ** k),
        (n * k,) * n,
        {(2 * n * k,) * n: -1},
    )
    return big == factor.expand(prec) * small


def verify_reduction_three(
    ctx: Context, nu: Multipartition, m: int, k: int, order: int
) -> bool:
    """With a nonzero shift k, the character sum against a class with an
    untwisted part vanishes, natively in the q variables."""
    n = ctx.n
    prec = order * 2 * n
    total = _char_weighted_sum_q(
        ctx,
        nu + ((m, 0),),
        prec,
        extra_key=lambda lam_bar: content_monomial_key(ctx, lam_bar, k),
    )
    return total.is_zero()
