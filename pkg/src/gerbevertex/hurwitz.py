"""Wreath Hurwitz generating functions and the relations they impose on the
framed vertex.

The double Hurwitz generating function attached to a pair of conjugacy
classes is computed by the Burnside character sum: each irreducible
contributes the product of its normalized characters at the two classes times
an exponential of the central characters.  These generating functions satisfy
orthogonality and degeneration identities, tie the framed vertex at different
framings together, and assemble into a square triangular system whose
leading-term determinants are explicit Vandermonde products.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .context import Context
from .cyclo import CycNum
from .partitions import (
    Multipartition,
    aut_order,
    multipartitions,
    negate,
    normalize,
    ordered_parts,
    paired_rows,
    partitions_of,
    shift_candidates,
    shift_twists,
    size,
    twist_word,
    twisted_classes_upto,
    underlying,
    union,
    untwisted_part,
    z_order,
)
from .series import PuiseuxSeries
from .vertex import framing_factor_ux, gw_vertex, untwisted_vertex_closed

# ---------------------------------------------------------------------------
# the Burnside sum


_hurwitz_cache: dict = {}


def hurwitz_series(
    ctx: Context, nu: Multipartition, mu: Multipartition, a: Fraction, prec
) -> PuiseuxSeries:
    """Disconnected-cover generating function with both branch arguments
    scaled by a: u -> sqrt(-1) a u and x_i -> a zeta_2n^(-i) x_i."""
    a = Fraction(a)
    cache_key = (ctx.n, nu, mu, a, prec)
    hit = _hurwitz_cache.get(cache_key)
    if hit is not None:
        return hit
    d = size(mu)
    if size(nu) != d:
        raise ValueError("classes must have equal size")
    table = ctx.chars(d)
    zz = table.z(nu) * table.z(mu)
    out = ctx.uxvars.zero(prec)
    for lam in table.irreps:
        c = table.chi(lam, nu) * table.chi(lam, mu)
        if c.is_zero():
            continue
        out = out + framing_factor_ux(ctx, lam, -a, prec) * (c / zz)
    _hurwitz_cache[cache_key] = out
    return out


def verify_orthogonality(ctx: Context, d: int) -> bool:
    """At zero scaling the generating function collapses to the inverse
    centralizer order on the diagonal."""
    classes = multipartitions(ctx.n, d)
    table = ctx.chars(d)
    for nu in classes:
        for mu in classes:
            got = hurwitz_series(ctx, nu, negate(ctx.n, mu), Fraction(0), 2)
            want = ctx.uxvars.zero(2)
            if nu == mu:
                want = ctx.uxvars.one(2) * Fraction(1, table.z(mu))
            if got != want:
                return False
    return True


def verify_degeneration(ctx: Context, d: int, a: Fraction, b: Fraction, order: int) -> bool:
    """Splitting the target: the function at scaling a+b is the convolution of
    the functions at scalings a and b over a middle class."""
    classes = multipartitions(ctx.n, d)
    prec = order + 1
    for nu in classes:
        for mu in classes:
            lhs = hurwitz_series(ctx, nu, mu, Fraction(a) + Fraction(b), prec)
            rhs = ctx.uxvars.zero(prec)
            for sig in classes:
                rhs = rhs + hurwitz_series(ctx, nu, sig, a, prec) * z_order(
                    ctx.n, sig
                ) * hurwitz_series(ctx, negate(ctx.n, sig), mu, b, prec)
            if lhs.truncate(order) != rhs.truncate(order):
                return False
    return True


# ---------------------------------------------------------------------------
# relations between the vertex and the Hurwitz functions


def verify_relation_one(ctx: Context, mu: Multipartition, a: Fraction, order: int) -> bool:
    """The unframed vertex is the framed vertex convolved with the Hurwitz
    function at the same framing."""
    d = size(mu)
    prec = order + d + 1
    lhs = gw_vertex(ctx, mu, Fraction(0), prec)
    rhs = ctx.uxvars.zero(prec)
    for nu in multipartitions(ctx.n, d):
        h = hurwitz_series(ctx, negate(ctx.n, nu), mu, Fraction(a), prec)
        rhs = rhs + gw_vertex(ctx, nu, Fraction(a), prec) * z_order(ctx.n, nu) * h
    return lhs.truncate(order) == rhs.truncate(order)


def verify_relation_two(ctx: Context, mu: Multipartition, k: int, order: int) -> bool:
    """For a class with an untwisted part, the twist-shifted convolution of
    unframed vertices with Hurwitz functions at scaling k/n vanishes."""
    if not untwisted_part(mu):
        raise ValueError("the target class must have an untwisted part")
    d = size(mu)
    prec = order + d + 1
    total = ctx.uxvars.zero(prec)
    for nu in multipartitions(ctx.n, d):
        h = hurwitz_series(ctx, shift_twists(ctx.n, nu, k), mu, Fraction(k, ctx.n), prec)
        total = total + gw_vertex(ctx, nu, Fraction(0), prec) * z_order(ctx.n, nu) * h
    return total.truncate(order).is_zero()


# ---------------------------------------------------------------------------
# the triangular system for the fully twisted vertices


def system_entry(
    ctx: Context, mu: Multipartition, k: int, eta: Multipartition, prec
) -> PuiseuxSeries:
    """Matrix entry of the linear system: rows are (class, shift) pairs,
    columns are fully twisted classes."""
    n = ctx.n
    d_mu, d_eta = size(mu), size(eta)
    if d_eta > d_mu:
        return ctx.uxvars.zero(prec)
    if d_eta == d_mu:
        h = hurwitz_series(ctx, shift_twists(n, eta, k), mu, Fraction(k, n), prec)
        return h * z_order(n, eta)
    out = ctx.uxvars.zero(prec)
    for tau_plain in partitions_of(d_mu - d_eta):
        tau = normalize((s, 0) for s in tau_plain)
        nu = union(tau, eta)
        h = hurwitz_series(ctx, shift_twists(n, nu, k), mu, Fraction(k, n), prec)
        out = out + untwisted_vertex_closed(ctx, tau, prec) * z_order(n, nu) * h
    return out


def _specialize_to_first(ctx: Context, f: PuiseuxSeries) -> dict[int, CycNum]:
    """Set u = 0 and all x beyond the first to 0; return x_1 coefficients."""
    out = {}
    for key, c in f.terms.items():
        if key[0] != 0 or any(key[j] for j in range(2, ctx.n)):
            continue
        out[key[1]] = c
    return out


def verify_system_structure(ctx: Context, d: int, prec=None) -> bool:
    """The system matrix is square, vanishes above the size diagonal, and its
    top-size block specializes to a block-diagonal matrix across underlying
    partitions."""
    n = ctx.n
    if prec is None:
        prec = n + 2
    cols = twisted_classes_upto(n, d)
    rows = paired_rows(n, d)
    if len(rows) != len(cols):
        return False
    if len({(mu, k) for mu, k, _ in rows}) != len(rows):
        return False
    if [eta for _, _, eta in rows] != cols:
        return False
    for mu, k, _ in rows:
        for eta in cols:
            if size(eta) > size(mu):
                if not system_entry(ctx, mu, k, eta, prec).is_zero():
                    return False
    top_rows = [(mu, k) for mu, k, _ in rows if size(mu) == d]
    top_cols = [eta for eta in cols if size(eta) == d]
    for mu, k in top_rows:
        for eta in top_cols:
            if underlying(mu) != underlying(eta):
                entry = system_entry(ctx, mu, k, eta, prec)
                if _specialize_to_first(ctx, entry):
                    return False
    return True


def _det(field, rows: list[list[CycNum]]) -> CycNum:
    """Determinant by permutation expansion (matrices here are tiny)."""
    m = len(rows)
    if m == 0:
        return field.one
    from itertools import permutations

    out = field.zero
    for perm in permutations(range(m)):
        inv = sum(
            1 for i in range(m) for j in range(i + 1, m) if perm[i] > perm[j]
        )
        term = field.from_rational((-1) ** inv)
        for i in range(m):
            term = term * rows[i][perm[i]]
        out = out + term
    return out


def leading_blocks(ctx: Context, d: int):
    """Group the top-size rows and columns of the system into the diagonal
    sub-blocks of the specialized matrix."""
    n = ctx.n
    rows = [(mu, k, eta) for mu, k, eta in paired_rows(n, d) if size(mu) == d]
    cols = [eta for eta in twisted_classes_upto(n, d) if size(eta) == d]
    for tau in partitions_of(d):
        b_tau = [eta for eta in cols if underlying(eta) == tau]
        c_tau = [(mu, k) for mu, k, _ in rows if underlying(mu) == tau]
        if not b_tau and not c_tau:
            continue
        c = math.gcd(tau[0], n)
        for i in range(1, n // c + 1):
            d_i = set(range((i - 1) * c, i * c))
            # the admissible shifts attached to any leading twist in this range
            sigmas = {
                tuple(shift_candidates(n, ((tau[0], h1),))) for h1 in d_i if h1 != 0 or i > 1
            }
            if len(sigmas) > 1:
                raise AssertionError("shift sets differ within one twist range")
            sigma_i = set(sigmas.pop()) if sigmas else set()
            tails_b = {
                twist_word(n, normalize(ordered_parts(n, eta)[1:]))
                for eta in b_tau
                if ordered_parts(n, eta)[0][1] in d_i
            }
            tails_c = {
                twist_word(
                    n,
                    shift_twists(n, negate(n, normalize(ordered_parts(n, mu)[1:])), k),
                )
                for mu, k in c_tau
                if k in sigma_i
            }
            for h in sorted(tails_b | tails_c):
                block_b = [
                    eta
                    for eta in b_tau
                    if ordered_parts(n, eta)[0][1] in d_i
                    and twist_word(n, normalize(ordered_parts(n, eta)[1:])) == h
                ]
                block_c = [
                    (mu, k)
                    for mu, k in c_tau
                    if k in sigma_i
                    and twist_word(
                        n,
                        shift_twists(
                            n, negate(n, normalize(ordered_parts(n, mu)[1:])), k
                        ),
                    )
                    == h
                ]
                if block_b or block_c:
                    yield tau, i, h, block_b, block_c


def verify_leading_determinants(ctx: Context, d: int) -> bool:
    """Each diagonal sub-block of the specialized system has entries of the
    predicted leading order, and the determinant of leading coefficients
    matches the closed Vandermonde product and is nonzero."""
    n = ctx.n
    field = ctx.field
    prec = n + 2
    seen_rows = 0
    for tau, _, _, block_b, block_c in leading_blocks(ctx, d):
        if len(block_b) != len(block_c):
            return False
        seen_rows += len(block_b)
        c = math.gcd(tau[0], n)
        hbars = []
        for eta in block_b:
            h1 = ordered_parts(n, eta)[0][1]
            hbars.append(h1 % c)
        mat = []
        for mu, k in block_c:
            row = []
            for eta, hbar in zip(block_b, hbars):
                coeffs = _specialize_to_first(
                    ctx, system_entry(ctx, mu, k, eta, prec)
                )
                if any(e < hbar for e in coeffs):
                    return False
                lead = coeffs.get(hbar, field.zero)
                want = (
                    field.from_rational(
                        Fraction(
                            aut_order(eta) * tau[0] ** hbar,
                            aut_order(mu) * math.factorial(hbar),
                        )
                        * Fraction(k, n) ** hbar
                    )
                    * ctx.zeta_2n(-hbar)
                )
                if lead != want:
                    return False
                row.append(lead)
            mat.append(row)
        got = _det(field, mat)
        closed = field.one
        for mu, k in block_c:
            closed = closed * Fraction(1, aut_order(mu))
        for eta, hbar in zip(block_b, hbars):
            closed = closed * ctx.zeta_2n(-hbar) * Fraction(
                aut_order(eta) * tau[0] ** hbar, math.factorial(hbar)
            )
        vmat = [
            [field.from_rational(Fraction(k, n) ** hbar) for hbar in hbars]
            for _, k in block_c
        ]
        closed = closed * _det(field, vmat)
        if got != closed or got.is_zero():
            return False
    return seen_rows == len(
        [eta for eta in twisted_classes_upto(n, d) if size(eta) == d]
    )
