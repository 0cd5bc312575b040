"""Command line entry point: ``dyckfactors <command> [options]``.

Exit status is 0 on success, 1 when a verification or sweep finds a
failure, and 2 on bad usage.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .combinatorics import w_oracle, w_oracle_multi
from .counting import w_formula, w_formula_multi
from .errors import DyckFactorsError
from .genfun import solve_functional_equation
from .polynomials import gamma_expansion, is_real_rooted, symmetric_decomposition, w_poly
from .trees import PlaneTree, leaf_stats, phi, symmetry_trace

ORACLE_LIMIT = 12


class UsageError(Exception):
    pass


def table_rows(n_max: int) -> list[tuple[int, int, int, int]]:
    return [(n, k, m, w_formula(n, k, m))
            for n in range(n_max + 1) for k in range(n + 1) for m in range(k + 1)
            if w_formula(n, k, m)]


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _text(header, rows) -> str:
    cells = [list(map(str, header))] + [list(map(str, r)) for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    return "".join(" ".join(c.rjust(w) for c, w in zip(row, widths)) + "\n" for row in cells)


def _rows_out(header, rows, args) -> None:
    if args.format == "json":
        _dump([dict(zip(header, r)) for r in rows], args)
    elif args.format == "text":
        _emit(_text(header, rows), args.out)
    else:
        _emit(_csv(header, rows), args.out)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj, args) -> None:
    _emit(json.dumps(obj, indent=2, sort_keys=True, default=str) + "\n", getattr(args, "out", None))


def cmd_table(args) -> int:
    if args.n_max < 0:
        raise UsageError("--n-max must be nonnegative")
    _rows_out(["n", "k", "m", "w"], table_rows(args.n_max), args)
    return 0


def cmd_count(args) -> int:
    if args.ks:
        ks = [int(x) for x in args.ks.split(",")]
        rec = {"n": args.n, "ks": ks, "formula": w_formula_multi(args.n, ks)}
        if args.n <= ORACLE_LIMIT:
            rec["enumeration"] = w_oracle_multi(args.n, ks)
    else:
        if args.k is None or args.m is None:
            raise UsageError("count needs --k and --m, or --ks")
        rec = {"n": args.n, "k": args.k, "m": args.m, "formula": w_formula(args.n, args.k, args.m)}
        if args.n <= ORACLE_LIMIT:
            rec["enumeration"] = w_oracle(args.n, args.k, args.m)
    _dump(rec, args)
    return 0 if rec.get("enumeration", rec["formula"]) == rec["formula"] else 1


def cmd_series(args) -> int:
    if args.order < 0:
        raise UsageError("--order must be nonnegative")
    w = solve_functional_equation(args.order)
    _rows_out(["n", "k", "m", "coeff"], [(n, k, m, c) for (n, k, m), c in w], args)
    return 0


def parse_tree(text: str) -> PlaneTree:
    """A tree in parenthesis form, or a Dyck word over U/D."""
    text = text.strip()
    if not text:
        raise UsageError("empty input")
    if set(text) <= set("()"):
        return PlaneTree.from_parens(text)
    if set(text.upper()) <= set("UD"):
        return phi(text.upper())
    raise UsageError(f"cannot parse {text!r} as a tree or a Dyck word")


def cmd_bijection(args) -> int:
    text = args.input if args.input is not None else sys.stdin.read()
    tree = parse_tree(text)
    leaves, good = leaf_stats(tree)
    if args.k is not None and leaves != args.k:
        raise UsageError(f"input has {leaves} leaves, expected k={args.k}")
    if tree.size != 2 * leaves + 1:
        raise UsageError(f"the symmetry needs 2k+1 non-root vertices and k leaves; "
                         f"input has {tree.size} non-root vertices and {leaves} leaves")
    trace = symmetry_trace(tree)
    trace["k"], trace["m"] = leaves, good
    trace["m'"] = leaf_stats(PlaneTree.from_parens(trace["T'"]))[1]
    _dump(trace, args)
    return 0


def cmd_verify(args) -> int:
    from .verify import run_suite

    report = run_suite(args.suite, args.n_max, seed=args.seed)
    _dump(report, args)
    return 0 if report["passed"] else 1


def cmd_polys(args) -> int:
    if not 1 <= args.k <= args.n:
        raise UsageError("need 1 <= k <= n")
    p = w_poly(args.n, args.k)
    dec = symmetric_decomposition(args.n, args.k)
    rec = {
        "n": args.n,
        "k": args.k,
        "coefficients": p.to_list(),
        "real_rooted": is_real_rooted(p),
        "decomposition": {"case": dec.case, "plus": dec.plus.to_list(), "minus": dec.minus.to_list(),
                          "w_plus": list(dec.raw_plus), "w_minus": list(dec.raw_minus)},
    }
    # a symmetric W is centred at lowest + highest exponent
    low = next(i for i, c in enumerate(p.coeffs) if c)
    d = low + p.degree
    if p.is_symmetric(d):
        rec["gamma"] = {"d": d, "gammas": list(gamma_expansion(p, d).gammas)}
    _dump(rec, args)
    return 0


def cmd_conjectures(args) -> int:
    from . import conjectures as cj

    if args.id == 1:
        ks = [args.k] if args.k else list(range(1, 7))
        top = args.max or 15
        reports = [cj.check_sturm_sequence(k, max(top, k)) for k in ks]
    elif args.id == 2:
        reports = [cj.check_sturm_unimodal(args.max or 15)]
    elif args.id == 3:
        reports = [cj.check_realroot_characterization(args.max or 30)]
    else:
        reports = [cj.check_w2k_formulas(args.max or 12)]
    payload = [r.to_dict() for r in reports]
    _dump(payload[0] if len(payload) == 1 else payload, args)
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dyckfactors", description="UD- and UUD-factors of Dyck paths.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=False):
        sp.add_argument("--out", help="write output to this file instead of stdout")
        if fmt:
            sp.add_argument("--format", choices=["csv", "json", "text"], default="csv")

    sp = sub.add_parser("table", help="nonzero w(n,k,m) for n <= n-max")
    sp.add_argument("--n-max", type=int, default=10)
    common(sp, fmt=True)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("count", help="one w(n,k,m) or w(n; k1,...,kr), formula and enumeration")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--ks", help="comma separated k1,...,kr")
    common(sp)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("series", help="coefficients of W solved from its functional equation")
    sp.add_argument("--order", type=int, default=10)
    common(sp, fmt=True)
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("bijection", help="trace the good-leaf symmetry on one tree")
    sp.add_argument("input", nargs="?", help="tree as parentheses or a Dyck word; read from stdin if omitted")
    sp.add_argument("--k", type=int, help="expected number of leaves")
    common(sp)
    sp.set_defaults(func=cmd_bijection)

    sp = sub.add_parser("verify", help="run an invariant suite")
    sp.add_argument("--suite", choices=["oracle", "bijections", "identities", "series", "polys", "all"],
                    default="all")
    sp.add_argument("--n-max", type=int, default=8)
    sp.add_argument("--seed", type=int, default=2024)
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("polys", help="W_{n,k}(t): roots, gamma vector, symmetric parts")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_polys)

    sp = sub.add_parser("conjectures", help="sweep one conjecture over a finite range")
    sp.add_argument("--id", type=int, choices=[1, 2, 3, 4], required=True,
                    help="1 Sturm sequence in n, 2 Sturm-unimodal in k, "
                         "3 real-rooted symmetric parts, 4 closed forms at n = 2k")
    sp.add_argument("--max", type=int, help="upper end of the sweep")
    sp.add_argument("--k", type=int, help="single k for --id 1 (default 1..6)")
    common(sp)
    sp.set_defaults(func=cmd_conjectures)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DyckFactorsError) as exc:
        print(f"dyckfactors: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
