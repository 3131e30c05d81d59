#!/usr/bin/env python3
"""Write the tensor-power growth diagrams as DOT files.

Render with e.g. `dot -Tsvg vector_powers.dot -o vector_powers.svg`.
"""

import argparse
import sys
from pathlib import Path

from b2tensor.diagram import to_dot


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pmax", type=int, default=4)
    ap.add_argument("--out", type=Path, default=Path("."), metavar="DIR")
    ap.add_argument("--module", choices=("vector", "spinor", "both"), default="both")
    args = ap.parse_args()
    if args.pmax < 1:
        print("need --pmax >= 1", file=sys.stderr)
        return 2
    modules = ("vector", "spinor") if args.module == "both" else (args.module,)
    args.out.mkdir(parents=True, exist_ok=True)
    for mod in modules:
        path = args.out / f"{mod}_powers.dot"
        path.write_text(to_dot(mod, args.pmax), encoding="utf-8")
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
