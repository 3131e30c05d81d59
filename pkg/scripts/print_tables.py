#!/usr/bin/env python3
"""Print the closed-form multiplicity tables next to the recurrence values.

Every cell shows formula/recurrence; a trailing * marks disagreement (none
are expected for the validated forms).
"""

import argparse
import sys
from fractions import Fraction

from b2tensor import closed_forms as cf
from b2tensor.engine import m_extended


def cell(formula, truth) -> str:
    mark = "" if formula == truth else "*"
    return f"{formula}{mark}"


def print_vector(p: int) -> None:
    print(f"vector table at p={p}: cell (i,j) is the multiplicity of (p-i, j)")
    for i in range(4):
        row = []
        for j in range(4):
            got = cf.vector_table(i, j, p)
            want = m_extended("vector", p, cf.vector_table_weight(i, j, p))
            row.append(cell(got, want))
        print("  " + "  ".join(f"{c:>8}" for c in row))


def print_spinor(p: int) -> None:
    print(f"spinor table at p={p}: entry (a,b) is the multiplicity of (p/2-b+1, p/2-a)")
    for (a, b) in cf.SPINOR_TABLE_KEYS:
        got = cf.spinor_table(a, b, p)
        want = m_extended("spinor", p, cf.spinor_table_weight(a, b, p))
        print(f"  ({a},{b}): {cell(got, want)}")


def print_diagonals(p: int) -> None:
    print(f"diagonal families at p={p}: family s at offset t sits at (p-t-s+1, t)")
    for s in range(1, 7):
        used_corrected = s == 5
        vals = []
        for t in range(0, min(p, 6) + 1):
            got = cf.diagonal_formula(s, t, p, corrected=used_corrected)
            want = m_extended("vector", p, cf.diagonal_weight(s, t, p))
            vals.append(cell(got, want))
        suffix = " (corrected bracket)" if used_corrected else ""
        print(f"  s={s}{suffix}: " + "  ".join(f"{v:>6}" for v in vals))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--power", type=int, default=8, metavar="P")
    ap.add_argument(
        "--which", choices=("vector", "spinor", "diagonal", "all"), default="all"
    )
    args = ap.parse_args()
    if args.power < 2:
        print("tables need --power >= 2", file=sys.stderr)
        return 2
    if args.which in ("vector", "all"):
        print_vector(args.power)
    if args.which in ("spinor", "all"):
        print_spinor(args.power)
    if args.which in ("diagonal", "all"):
        print_diagonals(args.power)
    return 0


if __name__ == "__main__":
    sys.exit(main())
