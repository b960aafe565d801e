"""Degree-d potentials of local cyclic-gerbe threefolds over the projective
line, on both sides of the correspondence.

The Gromov-Witten side glues two framed one-leg vertices along a class and
its twist-shift.  The Donaldson-Thomas side is a sum over irreducibles of a
colored hook product squared times an explicit monomial weight.  Both are
expanded in the exponential variables and compared order by order; a separate
exact product-form identity justifies the term-by-term regrouping.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .context import Context
from .fock import colored_box_data
from .loopschur import content_monomial_key
from .partitions import (
    Multipartition,
    conjugate,
    multipartitions,
    shift_twists,
    z_order,
)
from .series import FactoredSeries, PuiseuxSeries
from .vertex import dt_vertex_q, dt_vertex_ux, framing_root, gw_vertex
from .wreath import Label


def _nb_int(ctx: Context, b: Fraction) -> int:
    nb = Fraction(b) * ctx.n
    if nb.denominator != 1:
        raise ValueError("degree parameter must lie in (1/n)Z")
    return int(nb)


def hook_product_inverse(ctx: Context, lam_bar: tuple[int, ...]) -> FactoredSeries:
    """1 / prod over boxes of (1 - prod_i q_i^(hook color count))."""
    factors: dict = {}
    for (_, _, _, hooks) in colored_box_data(lam_bar, ctx.n):
        key = tuple(2 * ctx.n * h for h in hooks)
        factors[key] = factors.get(key, 0) - 1
    return FactoredSeries(ctx.qvars, ctx.field.one, (0,) * ctx.n, factors)


def verify_conjugate_reversal(ctx: Context, lam_bar: tuple[int, ...]) -> bool:
    """The hook product of the conjugate diagram in the reversed variables
    q_0, q_{n-1}, ..., q_1 equals the hook product of the diagram itself."""
    n = ctx.n
    direct = hook_product_inverse(ctx, lam_bar).factors
    reversed_: dict = {}
    for (_, _, _, hooks) in colored_box_data(conjugate(lam_bar), n):
        key = [0] * n
        for c in range(n):
            key[(-c) % n] = 2 * n * hooks[c]
        key = tuple(key)
        reversed_[key] = reversed_.get(key, 0) - 1
    return direct == reversed_


def _weight_key(ctx: Context, lam_bar: tuple[int, ...], nb: int) -> tuple[int, ...]:
    """Scaled q-exponents of the monomial weight on the DT side: the colored
    sum of (row + column - 1) minus (1 + b) times the content monomial."""
    n = ctx.n
    key = [0] * n
    for i, row in enumerate(lam_bar, start=1):
        for j in range(1, row + 1):
            key[(j - i) % n] += 2 * n * (i + j - 1)
    shift = content_monomial_key(ctx, lam_bar, -(nb + n))
    return tuple(a + s for a, s in zip(key, shift))


def dt_term_q(ctx: Context, lam: Label, b: Fraction) -> FactoredSeries:
    """The summand of the DT potential for one irreducible, in closed
    q-variable form: hook product squared times the monomial weight."""
    from .fock import combine_quotient

    nb = _nb_int(ctx, b)
    lam_bar = combine_quotient(lam)
    d = sum(sum(c) for c in lam)
    base = hook_product_inverse(ctx, lam_bar)
    sign = ctx.field.from_rational((-1) ** (d * nb))
    return FactoredSeries(
        ctx.qvars,
        sign,
        _weight_key(ctx, lam_bar, nb),
        {k: 2 * e for k, e in base.factors.items()},
    )


def verify_term_identity(ctx: Context, lam: Label, k: int, b: Fraction) -> bool:
    """Exact product-form identity: the product of the framed and unframed
    vertices, weighted by the gluing constants, equals the DT summand."""
    n = ctx.n
    nb = _nb_int(ctx, b)
    d = sum(sum(c) for c in lam)
    lhs = dt_vertex_q(ctx, lam, Fraction(b)) * dt_vertex_q(ctx, lam, Fraction(0))
    const = ctx.zeta_2n() ** (d * nb)  # branch choice for (-1)^(d b)
    for l, comp in enumerate(lam):
        const = const * ctx.zeta_n((-k * l * sum(comp)) % n)
    lhs = FactoredSeries(ctx.qvars, lhs.coeff * const, lhs.mono, lhs.factors)
    rhs = dt_term_q(ctx, lam, b)
    return lhs.coeff == rhs.coeff and lhs.mono == rhs.mono and lhs.factors == rhs.factors


def gw_potential(ctx: Context, k: int, b: Fraction, d: int, prec) -> PuiseuxSeries:
    """Glued GW potential in the exponential variables."""
    n = ctx.n
    nb = _nb_int(ctx, b)
    out = ctx.uxvars.zero(prec)
    for mu in multipartitions(n, d):
        term = gw_vertex(ctx, mu, Fraction(b), prec) * z_order(n, mu) * gw_vertex(
            ctx, shift_twists(n, mu, k), Fraction(0), prec
        )
        out = out + term
    return out * (ctx.zeta_2n() ** (d * nb))


def dt_potential(ctx: Context, k: int, b: Fraction, d: int, prec) -> PuiseuxSeries:
    """DT potential in the exponential variables, term by term over
    irreducibles via the exact product-form identity."""
    n = ctx.n
    nb = _nb_int(ctx, b)
    out = ctx.uxvars.zero(prec)
    for lam in ctx.chars(d).irreps:
        if not verify_term_identity(ctx, lam, k, b):
            raise AssertionError(f"product-form identity fails for {lam}")
        const = ctx.zeta_2n() ** (d * nb)
        for l, comp in enumerate(lam):
            const = const * ctx.zeta_n((-k * l * sum(comp)) % n)
        term = dt_vertex_ux(ctx, lam, Fraction(b), prec) * dt_vertex_ux(
            ctx, lam, Fraction(0), prec
        )
        out = out + term * const
    return out


def verify_correspondence(ctx: Context, k: int, b: Fraction, d: int, order: int) -> bool:
    """GW and DT potentials agree below the given order, and the conjugate
    reversal symmetry holds for every contributing diagram."""
    from .fock import combine_quotient

    for lam in ctx.chars(d).irreps:
        if not verify_conjugate_reversal(ctx, combine_quotient(lam)):
            return False
    prec = order + d + 1
    gw = gw_potential(ctx, k, b, d, prec)
    dt = dt_potential(ctx, k, b, d, prec)
    return gw.truncate(order) == dt.truncate(order)
