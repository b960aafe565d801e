"""Command-line front end: compute tables and series, run verification suites.

All output is deterministic JSON (sorted keys, stable term order).  Exit
status is 0 when every requested check passes, 1 on a failed check, and 2 on
usage errors.  The default truncation order can be set with the environment
variable GERBEVERTEX_ORDER.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .context import get_context
from .partitions import (
    format_multipartition,
    format_partition_tuple,
    multipartitions,
    parse_multipartition,
    untwisted_part,
)
from .series import series_to_json


def _frac(text: str) -> Fraction:
    return Fraction(text)


def _default_order() -> int:
    return int(os.environ.get("GERBEVERTEX_ORDER", "6"))


def _emit(payload: dict, path: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True)
    if path:
        with open(path, "w") as f:
            f.write(text + "\n")
    else:
        print(text)


def _cmd_chartable(args) -> int:
    ctx = get_context(args.n)
    table = ctx.chars(args.d)
    rows = {}
    for lam in table.irreps:
        rows[format_partition_tuple(lam)] = {
            format_multipartition(mu): table.chi(lam, mu).to_string()
            for mu in table.classes
        }
    _emit(
        {
            "n": args.n,
            "d": args.d,
            "classes": [format_multipartition(mu) for mu in table.classes],
            "centralizer_orders": {
                format_multipartition(mu): table.z(mu) for mu in table.classes
            },
            "table": rows,
        },
        args.output,
    )
    return 0


def _cmd_schur(args) -> int:
    from .loopschur import loop_schur_closed

    ctx = get_context(args.n)
    shape = tuple(int(x) for x in args.shape.split(",") if x)
    fs = loop_schur_closed(ctx, shape)
    prec = sum(fs.mono) + args.order * 2 * args.n + 1
    _emit(
        {
            "n": args.n,
            "shape": list(shape),
            "order": args.order,
            "series": series_to_json(fs.expand(prec)),
        },
        args.output,
    )
    return 0


def _cmd_vertex(args) -> int:
    from .vertex import dt_vertex_ux, gw_vertex
    from .partitions import parse_partition_tuple

    ctx = get_context(args.n)
    a = _frac(args.a)
    prec = args.order
    if args.side == "gw":
        mu = parse_multipartition(args.cls, args.n)
        f = gw_vertex(ctx, mu, a, prec)
        label = format_multipartition(mu)
    else:
        lam = parse_partition_tuple(args.cls, args.n)
        f = dt_vertex_ux(ctx, lam, a, prec)
        label = format_partition_tuple(lam)
    _emit(
        {
            "n": args.n,
            "side": args.side,
            "label": label,
            "framing": str(a),
            "order": args.order,
            "series": series_to_json(f),
        },
        args.output,
    )
    return 0


def _cmd_hurwitz(args) -> int:
    from .hurwitz import hurwitz_series

    ctx = get_context(args.n)
    nu = parse_multipartition(args.nu, args.n)
    mu = parse_multipartition(args.mu, args.n)
    f = hurwitz_series(ctx, nu, mu, _frac(args.a), args.order)
    _emit(
        {
            "n": args.n,
            "nu": format_multipartition(nu),
            "mu": format_multipartition(mu),
            "scale": args.a,
            "order": args.order,
            "series": series_to_json(f),
        },
        args.output,
    )
    return 0


def _first_mismatch(lhs, rhs):
    keys = set(lhs.terms) | set(rhs.terms)
    field = lhs.vs.field
    for k in sorted(keys, key=lambda k: (sum(k), k)):
        a = lhs.terms.get(k, field.zero)
        b = rhs.terms.get(k, field.zero)
        if a != b:
            return {
                "monomial": [str(Fraction(e, lhs.vs.denom)) for e in k],
                "gw": a.to_string(),
                "dt": b.to_string(),
            }
    return None


def _cmd_gerbe(args) -> int:
    from .gerbe import dt_potential, gw_potential

    ctx = get_context(args.n)
    b = _frac(args.b)
    prec = args.order + args.degree + 1
    gw = gw_potential(ctx, args.k, b, args.degree, prec).truncate(args.order)
    dt = dt_potential(ctx, args.k, b, args.degree, prec).truncate(args.order)
    equal = gw == dt
    _emit(
        {
            "n": args.n,
            "k": args.k,
            "b": str(b),
            "degree": args.degree,
            "order": args.order,
            "gw": series_to_json(gw),
            "dt": series_to_json(dt),
            "equal": equal,
            "first_mismatch": None if equal else _first_mismatch(gw, dt),
        },
        args.output,
    )
    return 0 if equal else 1


# ---------------------------------------------------------------------------
# verification suites


def _verify_reduction(args) -> tuple[list, bool]:
    from . import vertex as vx

    ctx = get_context(args.n)
    results = []
    ok = True
    for d in range(1, args.d + 1):
        classes = multipartitions(args.n, d)
        if args.which == "I":
            for mu in classes:
                if not untwisted_part(mu):
                    continue
                good = vx.verify_reduction_one(ctx, mu, args.order)
                results.append({"class": format_multipartition(mu), "pass": good})
                ok = ok and good
        elif args.which == "II":
            for k in range(1, d + 1):
                for mu in multipartitions(args.n, d - k):
                    good = vx.verify_reduction_two(ctx, mu, k, args.order)
                    results.append(
                        {"class": format_multipartition(mu), "k": k, "pass": good}
                    )
                    ok = ok and good
        else:
            for m in range(1, d + 1):
                for nu in multipartitions(args.n, d - m):
                    for k in range(1, args.n):
                        good = vx.verify_reduction_three(ctx, nu, m, k, args.order)
                        results.append(
                            {
                                "class": format_multipartition(nu),
                                "part": m,
                                "shift": k,
                                "pass": good,
                            }
                        )
                        ok = ok and good
    return results, ok


def _verify_relations(args) -> tuple[list, bool]:
    from . import hurwitz as hw

    ctx = get_context(args.n)
    results = []
    ok = True
    framings = [Fraction(0), Fraction(1), Fraction(1, args.n)]
    for d in range(1, args.d + 1):
        for mu in multipartitions(args.n, d):
            for a in framings:
                good = hw.verify_relation_one(ctx, mu, a, args.order)
                results.append(
                    {"relation": 1, "class": format_multipartition(mu), "a": str(a), "pass": good}
                )
                ok = ok and good
            if untwisted_part(mu):
                for k in range(1, args.n):
                    good = hw.verify_relation_two(ctx, mu, k, args.order)
                    results.append(
                        {"relation": 2, "class": format_multipartition(mu), "k": k, "pass": good}
                    )
                    ok = ok and good
    return results, ok


def _verify_appendix(args) -> tuple[list, bool]:
    from . import hurwitz as hw

    ctx = get_context(args.n)
    results = []
    ok = True
    for d in range(1, args.d + 1):
        s = hw.verify_system_structure(ctx, d)
        l = hw.verify_leading_determinants(ctx, d)
        results.append({"d": d, "structure": s, "determinants": l})
        ok = ok and s and l
    return results, ok


def _verify_strips(args) -> tuple[list, bool]:
    from .fock import verify_sign_recursion

    ctx = get_context(args.n)
    results = []
    ok = True
    for d in range(1, args.d + 1):
        good = verify_sign_recursion(ctx.n, d)
        results.append({"d": d, "pass": good})
        ok = ok and good
    return results, ok


def _verify_theorem1(args) -> tuple[list, bool]:
    from . import vertex as vx

    ctx = get_context(args.n)
    results = []
    ok = True
    for d in range(1, args.d + 1):
        for lam in ctx.chars(d).irreps:
            good = vx.verify_frame(ctx, lam, max(2, args.order // 2))
            results.append({"label": format_partition_tuple(lam), "frame": good})
            ok = ok and good
    for which in ("I", "II", "III"):
        sub, good = _verify_reduction(
            argparse.Namespace(n=args.n, d=args.d, order=args.order, which=which)
        )
        results.append({"reduction": which, "pass": good})
        ok = ok and good
    return results, ok


def _verify_theorem2(args) -> tuple[list, bool]:
    from . import gerbe as gb

    ctx = get_context(args.n)
    good = gb.verify_correspondence(ctx, args.k, _frac(args.b), args.degree, args.order)
    return [
        {"n": args.n, "k": args.k, "b": args.b, "degree": args.degree, "pass": good}
    ], good


def _cmd_verify(args) -> int:
    dispatch = {
        "reduction": _verify_reduction,
        "relations": _verify_relations,
        "appendix": _verify_appendix,
        "strips": _verify_strips,
        "theorem1": _verify_theorem1,
        "theorem2": _verify_theorem2,
    }
    if args.suite == "all":
        results = []
        ok = True
        for n in range(1, args.max_n + 1):
            base = dict(n=n, d=args.max_d, order=args.order, jobs=args.jobs)
            for suite in ("strips", "appendix", "reduction", "relations"):
                sub_args = argparse.Namespace(**base, which="I")
                if suite == "reduction":
                    for which in ("I", "II", "III"):
                        sub, good = _verify_reduction(
                            argparse.Namespace(**base, which=which)
                        )
                        results.append({"n": n, "suite": f"reduction-{which}", "pass": good})
                        ok = ok and good
                else:
                    sub, good = dispatch[suite](sub_args)
                    results.append({"n": n, "suite": suite, "pass": good})
                    ok = ok and good
        _emit({"suite": "all", "results": results, "pass": ok}, args.output)
        return 0 if ok else 1
    results, ok = dispatch[args.suite](args)
    _emit({"suite": args.suite, "results": results, "pass": ok}, args.output)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gerbevertex")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, order=True):
        sp.add_argument("--n", type=int, required=True)
        if order:
            sp.add_argument("--order", type=int, default=_default_order())
        sp.add_argument("--output", default=None)
        sp.add_argument("--jobs", type=int, default=1)

    sp = sub.add_parser("chartable")
    common(sp, order=False)
    sp.add_argument("--d", type=int, required=True)
    sp.set_defaults(func=_cmd_chartable)

    sp = sub.add_parser("schur")
    common(sp)
    sp.add_argument("--shape", required=True)
    sp.set_defaults(func=_cmd_schur)

    sp = sub.add_parser("vertex")
    common(sp)
    sp.add_argument("--side", choices=("gw", "dt"), required=True)
    sp.add_argument("--cls", required=True, help="conjugacy class or irreducible label")
    sp.add_argument("--a", default="0")
    sp.set_defaults(func=_cmd_vertex)

    sp = sub.add_parser("hurwitz")
    common(sp)
    sp.add_argument("--nu", required=True)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--a", default="0")
    sp.set_defaults(func=_cmd_hurwitz)

    sp = sub.add_parser("gerbe")
    common(sp)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--degree", type=int, required=True)
    sp.set_defaults(func=_cmd_gerbe)

    sp = sub.add_parser("verify")
    vsub = sp.add_subparsers(dest="suite", required=True)
    for suite in ("reduction", "relations", "appendix", "strips", "theorem1"):
        vs = vsub.add_parser(suite)
        common(vs)
        vs.add_argument("--d", type=int, required=True)
        if suite == "reduction":
            vs.add_argument("--which", choices=("I", "II", "III"), required=True)
        vs.set_defaults(func=_cmd_verify)
    vs = vsub.add_parser("theorem2")
    common(vs)
    vs.add_argument("--k", type=int, required=True)
    vs.add_argument("--b", required=True)
    vs.add_argument("--degree", type=int, required=True)
    vs.set_defaults(func=_cmd_verify)
    vs = vsub.add_parser("all")
    vs.add_argument("--max-n", type=int, required=True)
    vs.add_argument("--max-d", type=int, required=True)
    vs.add_argument("--order", type=int, default=_default_order())
    vs.add_argument("--output", default=None)
    vs.add_argument("--jobs", type=int, default=1)
    vs.set_defaults(func=_cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
