"""Command line interface.

Exit codes: 0 on success, 1 when a verification suite reports a failure or a
computation cannot complete, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import sys

from . import closed_forms as cfm
from .cache import cached, canonical_json
from .diagram import to_dot
from .engine import decomposition, m_extended, recur_multiplicity, DecompositionResult
from .fans import (
    diff_report,
    fan_closed_form,
    fan_with_zero,
    singular_power_direct,
    singular_power_projected,
    spinor_singular_closed,
    vector_singular_closed,
    _support_halo,
)
from .lattice import Weight, is_dominant
from .series import LatticeSeries
from .verify import SUITE_ORDER, run_suite


def _weight_arg(text: str) -> Weight:
    return Weight.parse(text)


def _positive_int(text: str) -> int:
    n = int(text)
    if n < 0:
        raise ValueError("must be >= 0")
    return n


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="b2tensor",
        description="Exact decomposition of tensor powers of the so(5) vector and spinor modules",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")

    p = sub.add_parser("decompose", help="decompose the p-th tensor power into irreducibles")
    p.add_argument("--module", choices=("vector", "spinor"), required=True)
    p.add_argument("--power", type=_positive_int, required=True)
    p.add_argument("--cache", metavar="DIR", default=None)
    add_format(p)

    p = sub.add_parser("multiplicity", help="multiplicity of one weight in the p-th power")
    p.add_argument("--module", choices=("vector", "spinor"), required=True)
    p.add_argument("--power", type=_positive_int, required=True)
    p.add_argument("--weight", type=_weight_arg, required=True, metavar="V1,V2")
    p.add_argument(
        "--extended",
        action="store_true",
        help="evaluate the antisymmetric extension at non-dominant weights",
    )
    add_format(p)

    p = sub.add_parser("fan", help="fan coefficients of the p-fold diagonal injection")
    p.add_argument("--power", type=_positive_int, required=True)
    add_format(p)

    p = sub.add_parser("singular", help="singular element of the p-th power")
    p.add_argument("--module", choices=("vector", "spinor"), required=True)
    p.add_argument("--power", type=_positive_int, required=True)
    p.add_argument(
        "--projected",
        action="store_true",
        help="the p-th power of the one-factor singular element instead of ch^p * R",
    )
    p.add_argument("--cache", metavar="DIR", default=None)
    add_format(p)

    p = sub.add_parser("closed-form", help="closed-form coefficients and printed-formula diffs")
    p.add_argument("--kind", choices=("fan", "vector", "spinor"), required=True)
    p.add_argument("--power", type=_positive_int, required=True)
    p.add_argument("--weight", type=_weight_arg, default=None, metavar="V1,V2")
    p.add_argument(
        "--diff-printed",
        action="store_true",
        help="emit points where the verbatim published formula disagrees",
    )
    add_format(p)

    p = sub.add_parser("fit", help="fit a polynomial in p along a diagonal family")
    p.add_argument("--s", type=int, required=True, metavar="S", help="family index 1..6")
    p.add_argument("--t", type=_positive_int, required=True, metavar="T")
    p.add_argument("--pmax", type=_positive_int, default=10)
    add_format(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=tuple(SUITE_ORDER) + ("all",), default="all")
    p.add_argument("--pmax", type=_positive_int, default=10)
    add_format(p)

    p = sub.add_parser("diagram", help="growth diagram of tensor powers as DOT")
    p.add_argument("--module", choices=("vector", "spinor"), required=True)
    p.add_argument("--pmax", type=_positive_int, required=True)

    return top


def _emit_series(series: LatticeSeries, fmt: str) -> None:
    if fmt == "json":
        print(canonical_json(series.to_json_obj()))
    elif fmt == "csv":
        print("weight,coeff")
        for w, c in series.items():
            print(f'"{w.text()}",{c}')
    else:
        for w, c in series.items():
            print(f"{w.text():>12}  {c}")


def _emit_decomposition(result: DecompositionResult, fmt: str) -> None:
    if fmt == "json":
        print(canonical_json(result.to_json_obj()))
    elif fmt == "csv":
        print("weight,mult,dim")
        for t in result.to_json_obj()["terms"]:
            print('"{weight}",{mult},{dim}'.format(**t))
    else:
        obj = result.to_json_obj()
        print(f"{result.module}^(x{result.power}) =")
        for t in obj["terms"]:
            print(f'  {t["mult"]:>8} x L({t["weight"]})  dim {t["dim"]}')
        print(f"total dimension {result.dimension_sum()}")


def _cmd_decompose(args) -> int:
    payload = cached(
        args.cache,
        f"decompose-{args.module}-{args.power}",
        lambda: decomposition(args.module, args.power).to_json_obj(),
    )
    _emit_decomposition(DecompositionResult.from_json_obj(payload), args.format)
    return 0


def _cmd_multiplicity(args) -> int:
    if not args.extended and not is_dominant(args.weight):
        print(
            f"weight {args.weight.text()} is not dominant; pass --extended for "
            "the antisymmetric extension",
            file=sys.stderr,
        )
        return 2
    val = m_extended(args.module, args.power, args.weight)
    if args.format == "json":
        print(
            canonical_json(
                {
                    "module": args.module,
                    "power": args.power,
                    "weight": args.weight.text(),
                    "multiplicity": str(val),
                }
            )
        )
    elif args.format == "csv":
        print("module,power,weight,multiplicity")
        print(f'{args.module},{args.power},"{args.weight.text()}",{val}')
    else:
        print(val)
    return 0


def _cmd_fan(args) -> int:
    if args.power < 1:
        print("fan needs --power >= 1", file=sys.stderr)
        return 2
    _emit_series(fan_with_zero(args.power), args.format)
    return 0


def _cmd_singular(args) -> int:
    which = "projected" if args.projected else "direct"
    fn = singular_power_projected if args.projected else singular_power_direct
    payload = cached(
        args.cache,
        f"singular-{which}-{args.module}-{args.power}",
        lambda: fn(args.module, args.power).to_json_obj(),
    )
    _emit_series(LatticeSeries.from_json_obj(payload), args.format)
    return 0


def _closed_form_value(kind: str, p: int, w: Weight) -> int:
    if kind == "fan":
        if w.d1 % 2 or w.d2 % 2:
            return 0
        return fan_closed_form(p, w.d1 // 2, w.d2 // 2)
    if kind == "vector":
        return vector_singular_closed(p, w)
    return spinor_singular_closed(p, w)


def _cmd_closed_form(args) -> int:
    if args.power < 1:
        print("closed-form needs --power >= 1", file=sys.stderr)
        return 2
    if args.diff_printed:
        rows = diff_report(args.kind, args.power)
        if args.format == "json":
            print(canonical_json(rows))
        elif args.format == "csv":
            print("point,printed,direct")
            for r in rows:
                print('"{point}",{printed},{direct}'.format(**r))
        else:
            for r in rows:
                print(f'{r["point"]:>12}  printed {r["printed"]:>6}  direct {r["direct"]:>6}')
            print(f"{len(rows)} differing points")
        return 0
    if args.weight is not None:
        val = _closed_form_value(args.kind, args.power, args.weight)
        if args.format == "json":
            print(
                canonical_json(
                    {
                        "kind": args.kind,
                        "power": args.power,
                        "weight": args.weight.text(),
                        "coeff": str(val),
                    }
                )
            )
        else:
            print(val)
        return 0
    truth = (
        fan_with_zero(args.power)
        if args.kind == "fan"
        else singular_power_projected(args.kind, args.power)
    )
    series = LatticeSeries(
        {w: _closed_form_value(args.kind, args.power, w) for w in _support_halo(truth)}
    )
    _emit_series(series, args.format)
    return 0


def _cmd_fit(args) -> int:
    if not 1 <= args.s <= 6:
        print("--s must be 1..6", file=sys.stderr)
        return 2
    hi = args.pmax + 4
    recs = recur_multiplicity("vector", hi + 3)
    xs = list(range(6, hi + 1))
    ys = [recs[p](cfm.diagonal_weight(args.s, args.t, p)) for p in xs]
    try:
        fit = cfm.fit_polynomial(xs, ys)
    except cfm.PolynomialityError as exc:
        print(f"no polynomial certified: {exc}", file=sys.stderr)
        return 1
    preds = []
    for p in range(hi + 1, hi + 4):
        preds.append(
            {
                "p": p,
                "fit": str(fit(p)),
                "recurrence": str(recs[p](cfm.diagonal_weight(args.s, args.t, p))),
            }
        )
    coeffs = [str(c) for c in fit.coefficients()]
    if args.format == "json":
        print(
            canonical_json(
                {
                    "s": args.s,
                    "t": args.t,
                    "window": [xs[0], xs[-1]],
                    "degree": fit.degree,
                    "coefficients": coeffs,
                    "predictions": preds,
                }
            )
        )
    elif args.format == "csv":
        print("k,coefficient")
        for k, c in enumerate(coeffs):
            print(f"{k},{c}")
        print("p,fit,recurrence")
        for r in preds:
            print("{p},{fit},{recurrence}".format(**r))
    else:
        print(f"family s={args.s} t={args.t}, window p={xs[0]}..{xs[-1]}")
        print(f"degree {fit.degree}, coefficients (ascending): {', '.join(coeffs)}")
        for r in preds:
            mark = "ok" if r["fit"] == r["recurrence"] else "MISMATCH"
            print(f'  predict p={r["p"]}: {r["fit"]} (recurrence {r["recurrence"]}) {mark}')
    bad = any(r["fit"] != r["recurrence"] for r in preds)
    return 1 if bad else 0


def _cmd_verify(args) -> int:
    report = run_suite(args.suite, args.pmax)
    if args.format == "json":
        print(canonical_json(report.to_json_obj()))
    elif args.format == "csv":
        print("name,status,evidence")
        for c in report.checks:
            print(f'{c.name},{c.status},"{c.evidence}"')
    else:
        print(report.render_pretty(), end="")
    return 0 if report.ok else 1


def _cmd_diagram(args) -> int:
    print(to_dot(args.module, args.pmax), end="")
    return 0


_DISPATCH = {
    "decompose": _cmd_decompose,
    "multiplicity": _cmd_multiplicity,
    "fan": _cmd_fan,
    "singular": _cmd_singular,
    "closed-form": _cmd_closed_form,
    "fit": _cmd_fit,
    "verify": _cmd_verify,
    "diagram": _cmd_diagram,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (ValueError, KeyError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
