"""Wreath product character tables and central characters."""

import math
from fractions import Fraction

from gerbevertex.context import get_context
from gerbevertex.fock import combine_quotient
from gerbevertex.partitions import multipartitions, negate, normalize
from gerbevertex.wreath import (
    central_transposition,
    central_transposition_via_table,
    central_twist,
    central_twist_via_table,
    dimension,
    sign_quotient_ratio,
)

from oracles import mn_character, wreath_character_oracle


def test_row_orthogonality():
    for n in (1, 2, 3):
        for d in range(1, 4):
            ctx = get_context(n)
            table = ctx.chars(d)
            for lam in table.irreps:
                for sig in table.irreps:
                    s = ctx.field.zero
                    for mu in table.classes:
                        s = s + table.chi(lam, mu) * table.chi(sig, mu).conj() / table.z(mu)
                    want = ctx.field.one if lam == sig else ctx.field.zero
                    assert s == want


def test_column_orthogonality():
    for n in (1, 2, 3):
        for d in range(1, 4):
            ctx = get_context(n)
            table = ctx.chars(d)
            for mu in table.classes:
                for nu in table.classes:
                    s = ctx.field.zero
                    for lam in table.irreps:
                        s = s + table.chi(lam, mu) * table.chi(lam, nu).conj()
                    want = ctx.field.from_rational(table.z(mu)) if mu == nu else ctx.field.zero
                    assert s == want


def test_negated_class_conjugates():
    for n in (2, 3):
        for d in range(1, 4):
            ctx = get_context(n)
            table = ctx.chars(d)
            for lam in table.irreps:
                for mu in table.classes:
                    assert table.chi(lam, negate(n, mu)) == table.chi(lam, mu).conj()


def test_dimension_column():
    for n in (1, 2, 3):
        for d in range(1, 4):
            ctx = get_context(n)
            table = ctx.chars(d)
            identity = normalize([(1, 0)] * d)
            group = n**d * math.factorial(d)
            total = 0
            for lam in table.irreps:
                val = table.chi(lam, identity)
                assert val.is_rational()
                dim = int(val.as_rational())
                assert dim == dimension(lam)
                total += dim * dim
            assert total == group


def test_group_algebra_oracle_match():
    for n, dmax in ((1, 4), (2, 3), (3, 2)):
        ctx = get_context(n)
        for d in range(1, dmax + 1):
            table = ctx.chars(d)
            reps, sizes, oracle = wreath_character_oracle(n, d)
            assert len(reps) == len(table.classes)
            group = n**d * math.factorial(d)
            for cls in reps:
                assert sizes[cls] * table.z(normalize(cls)) == group
            for shapes, row in oracle.items():
                for cls, vec in row.items():
                    got = ctx.field.zero
                    for e, v in vec.items():
                        got = got + ctx.field.zeta(n, e) * v
                    assert got == table.chi(shapes, normalize(cls))


def test_sign_ratio_against_border_strip_recursion():
    for n in (1, 2, 3):
        for d in range(1, 4):
            ctx = get_context(n)
            for lam in ctx.chars(d).irreps:
                combined = combine_quotient(lam)
                chi = mn_character(combined, (n,) * d)
                assert chi == sign_quotient_ratio(lam) * dimension(lam)


def test_central_characters_both_routes():
    for n in (1, 2, 3):
        for d in range(1, 5):
            ctx = get_context(n)
            table = ctx.chars(d)
            for lam in table.irreps:
                assert central_transposition_via_table(table, lam) == Fraction(
                    central_transposition(lam)
                )
                for i in range(n):
                    assert central_twist_via_table(table, lam, i) == central_twist(
                        lam, i, ctx.field
                    )
