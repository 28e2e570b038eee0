#!/usr/bin/env python3
"""End-to-end verification run over the six worked discriminants.

For every class of every discriminant, compares the closed-formula
coefficients against the enumeration oracle for both equivalence flavours
and prints a per-class line plus a summary.  Exits nonzero on any
disagreement.
"""

import argparse
import sys
import time

from latzeta.classgroup import cached_group
from latzeta.formulas import gl_zeta, sl_zeta
from latzeta.sublattice import brute_coefficients

DISCS = (-3, -4, -7, -8, -20, -23)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", "-N", type=int, default=300)
    ap.add_argument("--discs", type=int, nargs="*", default=list(DISCS))
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    failures = 0
    t_start = time.perf_counter()
    for D in args.discs:
        sl = sl_zeta(D, args.max).integer_coeffs()
        for g in cached_group(D).elements:
            t0 = time.perf_counter()
            table = brute_coefficients(g, args.max, jobs=args.jobs)
            gl = gl_zeta(D, g, args.max).gl_counts()
            ok_sl = sl[1:] == table.sl[1:]
            ok_gl = gl[1:] == table.gl[1:]
            status = "OK" if ok_sl and ok_gl else "MISMATCH"
            failures += not (ok_sl and ok_gl)
            print(
                f"D={D:4d}  class {str(g):>12}  sl {'ok' if ok_sl else 'BAD'}  "
                f"gl {'ok' if ok_gl else 'BAD'}  [{status}]  "
                f"({time.perf_counter() - t0:.2f} s)"
            )
    total = time.perf_counter() - t_start
    print(f"\n{'all classes verified' if not failures else f'{failures} FAILURES'} "
          f"to m <= {args.max} in {total:.1f} s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
