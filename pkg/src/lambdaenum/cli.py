"""Command-line front end.

Every subcommand writes deterministic output: data on stdout,
diagnostics on stderr.  Exit status: 0 success, 1 usage error,
2 computation error.  Large integers are always printed in decimal
(JSON renders them as strings, never floats).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import enumeration, series, simpletypes, trees
from .enumeration import Family
from .terms import SizeModel, parse_term, render_term, size

_MODELS = {"natural": SizeModel.NATURAL, "a1": SizeModel.A1, "minf": SizeModel.MINF}

_FAMILIES = {
    "normal": Family.NORMAL_FORM,
    "neutral": Family.NEUTRAL,
    "hnf": Family.HEAD_NF,
    "neutral-hnf": Family.NEUTRAL_HNF,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _print_series(tables: list[series.SeriesTable], fmt: str) -> None:
    if fmt == "text":
        for t in tables:
            values = ", ".join(str(v) for v in t.coeffs)
            if len(tables) == 1:
                print(values)
            else:
                print(f"{t.family}: {values}")
    elif fmt == "csv":
        header = "n," + ",".join(t.family for t in tables)
        print(header)
        for n in range(len(tables[0])):
            print(f"{n}," + ",".join(str(t.coeffs[n]) for t in tables))
    else:
        out = {t.family: [str(v) for v in t.coeffs] for t in tables}
        print(json.dumps(out, indent=2))


def _cmd_series(args) -> int:
    n = args.n
    if args.family == "linf":
        tables = [series.linf_coeffs_holonomic(n)]
    elif args.family == "lm":
        tables = [series.lm_coeffs(args.m, n)]
    elif args.family == "a1":
        tables = [series.a1_coeffs(n)]
    elif args.family == "nf":
        nf = series.nf_coeffs(n)
        tables = [nf.indices, nf.neutral, nf.normal]
    elif args.family == "hnf":
        hnf = series.hnf_coeffs(n)
        tables = [hnf.neutral_hnf, hnf.hnf]
    elif args.family == "minf":
        tables = [series.minf_coeffs(n)]
    else:  # avoid
        sub = series.subterm_series(args.pattern_size, n)
        tables = [sub.containing, sub.avoiding]
    _print_series(tables, args.format)
    return 0


def _cmd_enumerate(args) -> int:
    for t in _stream(args):
        print(render_term(t))
    return 0


def _cmd_count(args) -> int:
    if args.family == "terms":
        print(enumeration.count(args.n, free_bound=args.free, model=_MODELS[args.model]))
    else:
        print(enumeration.count(args.n, family=_FAMILIES[args.family]))
    return 0


def _stream(args):
    if args.family == "terms":
        return enumeration.enumerate_terms(args.n, args.free, _MODELS[args.model])
    return enumeration.enumerate_family(args.n, _FAMILIES[args.family])


def _check_lbw(n: int):
    for t in enumeration.enumerate_terms(n):
        b = trees.lambda_to_bw(t)
        if trees.bw_size(b) != n or trees.bw_to_lambda(b) != t:
            return render_term(t)
    for b in trees.enumerate_trees(n, "bw"):
        if trees.lambda_to_bw(trees.bw_to_lambda(b)) != b:
            return trees.render_bw(b)
    return None


def _check_bwbz(n: int):
    for b in trees.enumerate_trees(n, "bw"):
        z = trees.bw_to_bz(b)
        if trees.bz_size(z) != n or trees.bz_to_bw(z) != b:
            return trees.render_bw(b)
    for z in trees.enumerate_trees(n, "bz"):
        if trees.bw_to_bz(trees.bz_to_bw(z)) != z:
            return trees.render_bz(z)
    return None


def _check_lbz(n: int):
    for t in enumeration.enumerate_terms(n):
        z = trees.lambda_to_bz(t)
        if trees.bz_size(z) != n or trees.bz_to_lambda(z) != t:
            return render_term(t)
    for z in trees.enumerate_trees(n, "bz"):
        if trees.lambda_to_bz(trees.bz_to_lambda(z)) != z:
            return trees.render_bz(z)
    return None


def _check_mone(n: int):
    for m in trees.enumerate_trees(n, "motzkin"):
        t = trees.motzkin_to_neutral(m)
        if size(t) != n or trees.neutral_to_motzkin(t) != m:
            return trees.render_motzkin(m)
    for t in enumeration.enumerate_family(n, Family.NEUTRAL):
        if trees.motzkin_to_neutral(trees.neutral_to_motzkin(t)) != t:
            return render_term(t)
    return None


def _check_khnf(n: int):
    # neutral hnfs of size n+1 <-> plain terms of size n
    for t in enumeration.enumerate_family(n + 1, Family.NEUTRAL_HNF):
        q = trees.khnf_shift(t)
        if size(q) != n or trees.khnf_unshift(q) != t:
            return render_term(t)
    for q in enumeration.enumerate_terms(n):
        if trees.khnf_shift(trees.khnf_unshift(q)) != q:
            return render_term(q)
    return None


_CHECKS = {
    "lbw": _check_lbw,
    "bwbz": _check_bwbz,
    "lbz": _check_lbz,
    "mone": _check_mone,
    "khnf": _check_khnf,
}


def _cmd_bijection(args) -> int:
    name = args.pair
    if args.check:
        for n in range(1, args.n + 1):
            bad = _CHECKS[name](n)
            if bad is not None:
                print(f"FAIL {name} size {n}: {bad}")
                return 2
        print(f"ok: {name} round-trips and preserves size through n={args.n}")
        return 0
    forward = args.apply is not None
    text = args.apply if forward else args.invert
    if name == "lbw":
        if forward:
            print(trees.render_bw(trees.lambda_to_bw(parse_term(text))))
        else:
            print(render_term(trees.bw_to_lambda(trees.parse_bw(text))))
    elif name == "bwbz":
        if forward:
            print(trees.render_bz(trees.bw_to_bz(trees.parse_bw(text))))
        else:
            print(trees.render_bw(trees.bz_to_bw(trees.parse_bz(text))))
    elif name == "lbz":
        if forward:
            print(trees.render_bz(trees.lambda_to_bz(parse_term(text))))
        else:
            print(render_term(trees.bz_to_lambda(trees.parse_bz(text))))
    elif name == "mone":
        if forward:
            print(render_term(trees.motzkin_to_neutral(trees.parse_motzkin(text))))
        else:
            print(trees.render_motzkin(trees.neutral_to_motzkin(parse_term(text))))
    else:  # khnf
        if forward:
            print(render_term(trees.khnf_shift(parse_term(text))))
        else:
            print(render_term(trees.khnf_unshift(parse_term(text))))
    return 0


def _cmd_typable(args) -> int:
    rows = [(n, *simpletypes.count_typable(n)) for n in range(args.max + 1)]
    if args.format == "csv":
        print("size,typable,all")
        for n, typ, clo in rows:
            print(f"{n},{typ},{clo}")
    else:
        width = max(len(str(r[2])) for r in rows)
        print(f"{'size':>4} {'typable':>{max(width, 7)}} {'all':>{max(width, 3)}}")
        for n, typ, clo in rows:
            print(f"{n:>4} {typ:>{max(width, 7)}} {clo:>{max(width, 3)}}")
    return 0


def _cmd_constants(args) -> int:
    rep = series.analytics(args.tol, pattern_sizes=(args.pattern_size,))
    tol = rep.tolerances
    lines = [
        ("rho", rep.rho_linf, tol["rho_linf"]),
        ("1/rho", rep.inv_rho, tol["inv_rho"]),
        ("C", rep.growth_constant, tol["growth_constant"]),
        ("C_H", rep.growth_constant_hnf, tol["growth_constant_hnf"]),
        ("density_neutral_hnf", rep.density_neutral_hnf, tol["rho_linf"]),
        ("density_hnf", rep.density_hnf, tol["density_hnf"]),
        (
            f"rho_T(p={args.pattern_size})",
            rep.rho_subterm[args.pattern_size],
            tol["rho_subterm"],
        ),
    ]
    for name, value, t in lines:
        print(f"{name} = {value!r} +/- {t:g}")
    return 0


def _cmd_density(args) -> int:
    n = args.n
    linf = series.linf_coeffs_holonomic(n)
    nf = series.nf_coeffs(n)
    hnf = series.hnf_coeffs(n)
    avoid = series.subterm_series(9, n) if n >= 9 else None
    rep = series.analytics()
    total = linf[n]
    rows = [
        ("neutral head normal forms", hnf.neutral_hnf[n], rep.rho_linf),
        ("head normal forms", hnf.hnf[n], rep.density_hnf),
        ("neutral terms", nf.neutral[n], 0.0),
        ("normal forms", nf.normal[n], 0.0),
    ]
    if avoid is not None:
        rows.append(("avoiding a size-9 subterm (SN bound)", avoid.avoiding[n], 0.0))
    print(f"densities among plain terms at size {n} (count {total}):")
    for name, cnt, limit in rows:
        ratio = cnt / total
        print(f"  {name}: {cnt} ratio {ratio:.12f} limit {limit:.12f}")
    return 0


def _cmd_approx(args) -> int:
    rep = series.analytics()
    ns = []
    step = 1
    while step <= args.n:
        for mult in (1, 2, 5):
            v = step * mult
            if v <= args.n:
                ns.append(v)
        step *= 10
    if args.n not in ns:
        ns.append(args.n)
    table = series.linf_coeffs_holonomic(args.n)
    print(f"{'n':>6} {'exact':>24} {'estimate':>16} {'ratio':>10}")
    for n in ns:
        exact = table[n]
        est = series.asymptotic_estimate(n, rep)
        ratio = series.estimate_ratio(n, rep)
        shown = str(exact) if exact < 10 ** 22 else f"{float(exact):.6e}"
        print(f"{n:>6} {shown:>24} {est:>16.6e} {ratio:>10.6f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lambdaenum", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("series", help="exact coefficient tables")
    sp.add_argument("family", choices=["linf", "lm", "a1", "nf", "hnf", "minf", "avoid"])
    sp.add_argument("-n", type=int, required=True, help="truncation order")
    sp.add_argument("--m", type=int, default=0, help="free-index bound for lm")
    sp.add_argument("--pattern-size", type=int, default=9)
    sp.add_argument("--format", choices=["text", "csv", "json"], default="text")
    sp.set_defaults(func=_cmd_series)

    for cmd, fn in (("enumerate", _cmd_enumerate), ("count", _cmd_count)):
        ep = sub.add_parser(cmd, help=f"{cmd} terms of one size")
        ep.add_argument("family", choices=["terms", "normal", "neutral", "hnf", "neutral-hnf"])
        ep.add_argument("-n", type=int, required=True)
        ep.add_argument("--free", type=int, default=None, help="free-index bound (terms only)")
        ep.add_argument("--model", choices=list(_MODELS), default="natural")
        ep.set_defaults(func=fn)

    bp = sub.add_parser("bijection", help="apply, invert or certify a translation")
    bp.add_argument("pair", choices=["lbw", "bwbz", "lbz", "mone", "khnf"])
    group = bp.add_mutually_exclusive_group(required=True)
    group.add_argument("--check", action="store_true")
    group.add_argument("--apply", metavar="INPUT")
    group.add_argument("--invert", metavar="INPUT")
    bp.add_argument("-n", type=int, default=8, help="max size for --check")
    bp.set_defaults(func=_cmd_bijection)

    tp = sub.add_parser("typable", help="typable/closed census")
    tp.add_argument("--max", type=int, required=True)
    tp.add_argument("--format", choices=["text", "csv"], default="text")
    tp.set_defaults(func=_cmd_typable)

    cp = sub.add_parser("constants", help="singularities, growth constants, densities")
    cp.add_argument("--tol", type=float, default=1e-14)
    cp.add_argument("--pattern-size", type=int, default=9)
    cp.set_defaults(func=_cmd_constants)

    dp = sub.add_parser("density", help="finite-size density report")
    dp.add_argument("-n", type=int, required=True)
    dp.set_defaults(func=_cmd_density)

    ap = sub.add_parser("approx", help="exact vs asymptotic estimate")
    ap.add_argument("-n", type=int, required=True)
    ap.set_defaults(func=_cmd_approx)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
