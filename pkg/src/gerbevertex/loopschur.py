"""Loop Schur functions of colored Young diagrams.

Boxes of a Young diagram are colored by content mod n.  The loop Schur
function specialized to q_{i,j} = q_i^j is computed two ways: by enumerating
semistandard tableaux (entries start at 0), and by the hook-content product
formula.  The k-shifted variant multiplies by a fractional monomial built from
the literal (unreduced) contents.
"""

from __future__ import annotations

from fractions import Fraction

from .context import Context
from .fock import colored_box_data, weighted_row_counts
from .series import FactoredSeries, PuiseuxSeries


def loop_schur_closed(ctx: Context, lam_bar: tuple[int, ...]) -> FactoredSeries:
    """Hook-content form: prod q_i^{n_i} / prod_boxes (1 - prod q_i^{h_i})."""
    n = ctx.n
    rows = weighted_row_counts(lam_bar, n)
    mono = tuple(2 * n * r for r in rows)
    out = FactoredSeries(ctx.qvars, ctx.field.one, mono, {})
    for (_, _, _, hooks) in colored_box_data(lam_bar, n):
        key = tuple(2 * n * h for h in hooks)
        out = FactoredSeries(ctx.qvars, out.coeff, out.mono,
                             {**out.factors, key: out.factors.get(key, 0) - 1})
    return out


def content_sums(lam_bar: tuple[int, ...], n: int) -> tuple[int, ...]:
    """For each color c, the sum of literal contents j - i over boxes of
    color c."""
    out = [0] * n
    for i, row in enumerate(lam_bar, start=1):
        for j in range(1, row + 1):
            out[(j - i) % n] += j - i
    return tuple(out)


def content_monomial_key(ctx: Context, lam_bar: tuple[int, ...], numerator: int) -> tuple[int, ...]:
    """Scaled exponents of (prod q_{j-i}^{j-i})^(numerator/n)."""
    sums = content_sums(lam_bar, ctx.n)
    return tuple(2 * numerator * e for e in sums)


def loop_schur_shifted(ctx: Context, lam_bar: tuple[int, ...], k: int) -> FactoredSeries:
    """S^k: the loop Schur function times the content monomial to the k/n."""
    base = loop_schur_closed(ctx, lam_bar)
    key = content_monomial_key(ctx, lam_bar, k)
    return FactoredSeries(ctx.qvars, base.coeff,
                          tuple(a + b for a, b in zip(base.mono, key)), base.factors)


def ssyt_fillings(lam_bar: tuple[int, ...], max_entry: int):
    """All semistandard fillings with entries in 0..max_entry (weakly
    increasing along rows, strictly increasing down columns)."""
    rows = list(lam_bar)
    filling = [[0] * r for r in rows]

    def rec(i, j):
        if i == len(rows):
            yield [row[:] for row in filling]
            return
        ni, nj = (i, j + 1) if j + 1 < rows[i] else (i + 1, 0)
        lo = 0
        if j > 0:
            lo = max(lo, filling[i][j - 1])
        if i > 0 and j < rows[i - 1]:
            lo = max(lo, filling[i - 1][j] + 1)
        for v in range(lo, max_entry + 1):
            filling[i][j] = v
            yield from rec(ni, nj)

    if not rows:
        yield []
        return
    yield from rec(0, 0)


def loop_schur_ssyt(ctx: Context, lam_bar: tuple[int, ...], order: int) -> PuiseuxSeries:
    """Tableau sum, truncated beyond total degree `order` in the q variables."""
    n = ctx.n
    prec = (order + 1) * 2 * n
    counts: dict = {}
    for filling in ssyt_fillings(lam_bar, order):
        key = [0] * n
        for i, row in enumerate(filling, start=1):
            for j, w in enumerate(row, start=1):
                key[(j - i) % n] += 2 * n * w
        key = tuple(key)
        counts[key] = counts.get(key, 0) + 1
    terms = {k: ctx.field.from_rational(c) for k, c in counts.items()}
    return PuiseuxSeries(ctx.qvars, terms, prec)
