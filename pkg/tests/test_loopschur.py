"""Loop Schur functions: tableau sums, hook-content products, strips."""

from gerbevertex.context import get_context
from gerbevertex.fock import add_strip
from gerbevertex.loopschur import (
    content_monomial_key,
    content_sums,
    loop_schur_closed,
    loop_schur_shifted,
    loop_schur_ssyt,
    ssyt_fillings,
)
from gerbevertex.partitions import partitions_of
from gerbevertex.series import FactoredSeries


def test_ssyt_counts_single_row():
    # fillings of a row of length r with entries 0..m: binomial(m+r, r)
    import math

    for r in (1, 2, 3):
        for m in (1, 2, 3):
            count = len(list(ssyt_fillings((r,), m)))
            assert count == math.comb(m + r, r)


def test_closed_equals_ssyt_small():
    for n in (1, 2, 3):
        ctx = get_context(n)
        for m in range(1, 6):
            for lam_bar in partitions_of(m):
                order = 6
                prec = (order + 1) * 2 * n
                closed = loop_schur_closed(ctx, lam_bar).expand(prec)
                tabs = loop_schur_ssyt(ctx, lam_bar, order)
                assert closed.truncate(tabs.prec) == tabs


def test_content_sums_total():
    for lam_bar in partitions_of(6):
        for n in (2, 3):
            total = sum(content_sums(lam_bar, n))
            direct = sum(
                j - i for i, row in enumerate(lam_bar, 1) for j in range(1, row + 1)
            )
            assert total == direct


def test_shifted_is_monomial_times_plain():
    n = 3
    ctx = get_context(n)
    lam_bar = (3, 2, 1)
    base = loop_schur_closed(ctx, lam_bar)
    for k in range(1, n):
        shifted = loop_schur_shifted(ctx, lam_bar, k)
        key = content_monomial_key(ctx, lam_bar, k)
        assert shifted.factors == base.factors
        assert shifted.mono == tuple(a + b for a, b in zip(base.mono, key))


def _strip_sum(ctx, lam_bar, l, k, prec):
    """Signed sum of (shifted) principal loop Schur functions over all ways of
    adding one strip of length l*n."""
    n = ctx.n
    out = ctx.qvars.zero(prec)
    for sigma, ht in add_strip(lam_bar, l * n):
        if k == 0:
            f = loop_schur_closed(ctx, sigma)
        else:
            f = loop_schur_shifted(ctx, sigma, k)
        out = out + f.expand(prec) * ((-1) ** ht)
    return out


def test_border_strip_identity_unshifted():
    for n in (2, 3):
        ctx = get_context(n)
        order = 8
        prec = order * 2 * n
        for m in (0, 1, 2, 3, 4):
            for lam_bar in partitions_of(m):
                from gerbevertex.fock import is_balanced

                for l in (1, 2):
                    diag = FactoredSeries(
                        ctx.qvars,
                        ctx.field.one,
                        (0,) * n,
                        {(2 * n * l,) * n: -1},
                    )
                    lhs = (loop_schur_closed(ctx, lam_bar) * diag).expand(prec)
                    rhs = _strip_sum(ctx, lam_bar, l, 0, prec)
                    assert lhs.truncate(rhs.prec) == rhs.truncate(lhs.prec)


def test_border_strip_identity_shifted_vanishes():
    for n in (2, 3):
        ctx = get_context(n)
        order = 8
        prec = order * 2 * n
        for m in (0, 1, 2, 3):
            for lam_bar in partitions_of(m):
                for l in (1, 2):
                    for k in range(1, n):
                        total = _strip_sum(ctx, lam_bar, l, k, prec)
                        assert total.is_zero()
